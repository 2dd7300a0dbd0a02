#include "mmkp/time_poly.hpp"

#include <algorithm>
#include <sstream>

namespace mmkp {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

int monomial_degree_copy(const Monomial& m, int copy) {
    int d = 0;
    for (auto& [v, e] : m)
        if (var_of(v).copy == copy) d += e;
    return d;
}

int monomial_weighted_degree(const Monomial& m, int copy, int component) {
    int d = 0;
    for (auto& [v, e] : m) {
        TimeVar tv = var_of(v);
        if (tv.copy == copy && tv.component == component) d += tv.order * e;
    }
    return d;
}

int monomial_max_order(const Monomial& m, int copy) {
    int k = 0;
    for (auto& [v, e] : m) {
        TimeVar tv = var_of(v);
        if (tv.copy == copy && tv.order > k) k = tv.order;
    }
    return k;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

bool Caps::admits(const Monomial& m) const {
    if (cap0 >= 0 && monomial_degree_copy(m, 0) > cap0) return false;
    if (cap1 >= 0 && monomial_degree_copy(m, 1) > cap1) return false;
    return true;
}

TimePolynomial TimePolynomial::constant(const Rational& c, Caps caps) {
    TimePolynomial p(caps);
    p.add_term({}, c);
    return p;
}

TimePolynomial TimePolynomial::variable(int copy, int component, int order,
                                        Caps caps, const Rational& coeff) {
    if (component < 1 || order < 1) throw ConfigError("bad time variable index");
    TimePolynomial p(caps);
    p.add_term({{var_id(copy, component, order), 1}}, coeff);
    return p;
}

Rational TimePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TimePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0 || !caps_.admits(m)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TimePolynomial::check_compatible(const TimePolynomial& o) const {
    // the zero polynomial lives in every truncation ideal, so it is
    // compatible with anything (lookups hand out default-capped zeros)
    if (terms_.empty() || o.terms_.empty()) return;
    if (!(caps_ == o.caps_))
        throw ConfigError("mismatched degree caps in polynomial arithmetic");
}

TimePolynomial TimePolynomial::operator+(const TimePolynomial& o) const {
    check_compatible(o);
    TimePolynomial out = terms_.empty() ? TimePolynomial(o.caps_) : *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

TimePolynomial TimePolynomial::operator-(const TimePolynomial& o) const {
    check_compatible(o);
    TimePolynomial out = terms_.empty() ? TimePolynomial(o.caps_) : *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

TimePolynomial TimePolynomial::operator-() const {
    TimePolynomial out(caps_);
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

TimePolynomial TimePolynomial::operator*(const TimePolynomial& o) const {
    check_compatible(o);
    TimePolynomial out(terms_.empty() ? o.caps_ : caps_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

bool TimePolynomial::operator==(const TimePolynomial& o) const {
    return terms_ == o.terms_;
}

TimePolynomial TimePolynomial::scaled(const Rational& c) const {
    TimePolynomial out(caps_);
    if (c == 0) return out;
    for (auto& [m, q] : terms_) out.terms_.emplace(m, q * c);
    return out;
}

TimePolynomial operator*(const Rational& c, const TimePolynomial& p) {
    return p.scaled(c);
}

TimePolynomial TimePolynomial::derivative(int copy, int component, int order) const {
    VarId v = var_id(copy, component, order);
    TimePolynomial out(caps_);
    for (auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != v) continue;
            Monomial d = m;
            Rational coeff = c * m[i].second;
            if (d[i].second == 1) d.erase(d.begin() + i);
            else d[i].second -= 1;
            out.add_term(d, coeff);
            break;
        }
    }
    return out;
}

int TimePolynomial::plain_degree(int copy) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, monomial_degree_copy(m, copy));
    return d;
}

int TimePolynomial::weighted_degree(int copy, int component) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, monomial_weighted_degree(m, copy, component));
    return d;
}

int TimePolynomial::max_order(int copy) const {
    int k = 0;
    for (auto& [m, c] : terms_) k = std::max(k, monomial_max_order(m, copy));
    return k;
}

TimePolynomial TimePolynomial::restricted(int d0, int d1) const {
    TimePolynomial out(caps_);
    for (auto& [m, c] : terms_) {
        if (d0 >= 0 && monomial_degree_copy(m, 0) > d0) continue;
        if (d1 >= 0 && monomial_degree_copy(m, 1) > d1) continue;
        out.terms_.emplace(m, c);
    }
    return out;
}

TimePolynomial TimePolynomial::with_caps(Caps caps) const {
    TimePolynomial out(caps);
    for (auto& [m, c] : terms_) {
        if (!caps.admits(m))
            throw ConfigError("with_caps: stored monomial violates the new caps");
        out.terms_.emplace(m, c);
    }
    return out;
}

TimePolynomial TimePolynomial::relabel_copy(int copy) const {
    TimePolynomial out(caps_);
    for (auto& [m, c] : terms_) {
        Monomial r;
        r.reserve(m.size());
        for (auto& [v, e] : m) {
            TimeVar tv = var_of(v);
            r.emplace_back(var_id(copy, tv.component, tv.order), e);
        }
        std::sort(r.begin(), r.end());
        out.add_term(r, c);
    }
    return out;
}

TimePolynomial TimePolynomial::series_inverse() const {
    Rational c0 = constant_term();
    if (c0 == 0) throw ConfigError("series_inverse: zero constant term");
    // 1/(c0 + R) = (1/c0) sum_n (-R/c0)^n; terminates because R is nilpotent
    // modulo the truncation ideal (caps must be finite for termination).
    if (caps_.cap0 < 0 && plain_degree(0) > 0)
        throw ConfigError("series_inverse: uncapped polynomial with nonconstant terms");
    TimePolynomial rest = *this;
    rest.terms_.erase(Monomial{});
    TimePolynomial out = constant(1 / c0, caps_);
    TimePolynomial pw = constant(1, caps_);
    while (true) {
        pw = pw * rest.scaled(-1 / c0);
        if (pw.is_zero()) break;
        out = out + pw.scaled(1 / c0);
    }
    return out;
}

std::string TimePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(c);
        for (auto& [v, e] : m) {
            TimeVar tv = var_of(v);
            os << " * " << (tv.copy == 0 ? "t" : "tp")
               << "[" << tv.component << "," << tv.order << "]";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace mmkp
