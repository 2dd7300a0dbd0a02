#include "mmkp/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace mmkp {

const char* symbol_name(Symbol s) {
    switch (s) {
        case Symbol::z: return "z";
        case Symbol::mu: return "mu";
        case Symbol::nu: return "nu";
    }
    return "?";
}

LaurentPolynomial LaurentPolynomial::mono(Symbol sym, int exponent, TimePolynomial coeff,
                                          int floor, int ceil) {
    LaurentPolynomial l(sym, floor, ceil);
    l.add_term(exponent, coeff);
    return l;
}

TimePolynomial LaurentPolynomial::coefficient(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? TimePolynomial{} : it->second;
}

void LaurentPolynomial::add_term(int exponent, const TimePolynomial& coeff) {
    if (coeff.is_zero() || exponent < floor_ || exponent > ceil_) return;
    auto [it, fresh] = c_.emplace(exponent, coeff);
    if (!fresh) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
    if (sym_ != o.sym_)
        throw ConfigError(std::string("mixed Laurent symbols: ") + symbol_name(sym_) +
                          " vs " + symbol_name(o.sym_));
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_compatible(o);
    // Hull of the two windows: a sum must retain everything either operand holds.
    LaurentPolynomial out(sym_, std::min(floor_, o.floor_), std::max(ceil_, o.ceil_));
    for (auto& [e, p] : c_) out.add_term(e, p);
    for (auto& [e, p] : o.c_) out.add_term(e, p);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial out(sym_, std::min(floor_, o.floor_), std::max(ceil_, o.ceil_));
    for (auto& [e, p] : c_) out.add_term(e, p);
    for (auto& [e, p] : o.c_) out.add_term(e, -p);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_compatible(o);
    // Supports add, so windows add (with saturation at the sentinels).
    int nf = (floor_ <= -unbounded || o.floor_ <= -unbounded) ? -unbounded : floor_ + o.floor_;
    int nc = (ceil_ >= unbounded || o.ceil_ >= unbounded) ? unbounded : ceil_ + o.ceil_;
    LaurentPolynomial out(sym_, nf, nc);
    for (auto& [ea, pa] : c_)
        for (auto& [eb, pb] : o.c_)
            out.add_term(ea + eb, pa * pb);
    return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    return sym_ == o.sym_ && c_ == o.c_;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& q) const {
    LaurentPolynomial out(sym_, floor_, ceil_);
    for (auto& [e, p] : c_) out.add_term(e, p.scaled(q));
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    int nf = floor_ <= -unbounded ? floor_ : floor_ + k;
    int nc = ceil_ >= unbounded ? ceil_ : ceil_ + k;
    LaurentPolynomial out(sym_, nf, nc);
    for (auto& [e, p] : c_) out.add_term(e + k, p);
    return out;
}

LaurentPolynomial LaurentPolynomial::symbol_derivative() const {
    int nf = floor_ <= -unbounded ? floor_ : floor_ - 1;
    LaurentPolynomial out(sym_, nf, ceil_);
    for (auto& [e, p] : c_) out.add_term(e - 1, p.scaled(e));
    return out;
}

LaurentPolynomial LaurentPolynomial::time_derivative(int copy, int component, int order) const {
    LaurentPolynomial out(sym_, floor_, ceil_);
    for (auto& [e, p] : c_) out.add_term(e, p.derivative(copy, component, order));
    return out;
}

LaurentPolynomial LaurentPolynomial::restricted(int d0, int d1) const {
    LaurentPolynomial out(sym_, floor_, ceil_);
    for (auto& [e, p] : c_) out.add_term(e, p.restricted(d0, d1));
    return out;
}

LaurentPolynomial LaurentPolynomial::with_bounds(int floor, int ceil) const {
    LaurentPolynomial out(sym_, floor, ceil);
    for (auto& [e, p] : c_) {
        if (e < floor || e > ceil)
            throw ConfigError("with_bounds: stored exponent " + std::to_string(e) +
                              " outside the new bounds");
        out.c_.emplace(e, p);
    }
    return out;
}

int LaurentPolynomial::min_exponent() const {
    return c_.empty() ? 0 : c_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    return c_.empty() ? 0 : c_.rbegin()->first;
}

long LaurentPolynomial::monomial_count() const {
    long n = 0;
    for (auto& [e, p] : c_) n += static_cast<long>(p.term_count());
    return n;
}

std::string LaurentPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, p] : c_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << p.to_string() << ") " << symbol_name(sym_) << "^" << e;
    }
    return os.str();
}

TimePolynomial residue(const LaurentPolynomial& l) {
    if (l.floor() > -1)
        throw ConfigError("residue: truncation floor " + std::to_string(l.floor()) +
                          " is above exponent -1; deepen the negative-exponent bound");
    return l.coefficient(-1);
}

LaurentPolynomial operator*(const TimePolynomial& c, const LaurentPolynomial& l) {
    LaurentPolynomial out(l.symbol(), l.floor(), l.ceil());
    for (auto& [e, p] : l.coefficients()) out.add_term(e, c * p);
    return out;
}

} // namespace mmkp
