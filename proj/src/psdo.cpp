#include "mmkp/psdo.hpp"

#include <algorithm>
#include <set>

namespace mmkp {

MatrixSeries MatrixSeries::identity(int N, Caps caps) {
    MatrixSeries m(N);
    for (int a = 1; a <= N; ++a) m.at(a, a) = TimePolynomial::constant(1, caps);
    return m;
}

MatrixSeries MatrixSeries::unit(int N, int alpha, Caps caps) {
    MatrixSeries m(N);
    m.at(alpha, alpha) = TimePolynomial::constant(1, caps);
    return m;
}

namespace {

void check_dims(int a, int b, const char* what) {
    if (a != b || a == 0) throw ConfigError(std::string(what) + ": matrix dimension mismatch");
}

} // namespace

MatrixSeries MatrixSeries::operator+(const MatrixSeries& o) const {
    check_dims(N_, o.N_, "matrix add");
    MatrixSeries out(N_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

MatrixSeries MatrixSeries::operator-(const MatrixSeries& o) const {
    check_dims(N_, o.N_, "matrix sub");
    MatrixSeries out(N_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

MatrixSeries MatrixSeries::operator*(const MatrixSeries& o) const {
    check_dims(N_, o.N_, "matrix mul");
    MatrixSeries out(N_);
    for (int a = 1; a <= N_; ++a)
        for (int b = 1; b <= N_; ++b) {
            TimePolynomial acc;
            for (int c = 1; c <= N_; ++c) acc = acc + at(a, c) * o.at(c, b);
            out.at(a, b) = acc;
        }
    return out;
}

MatrixSeries MatrixSeries::scaled(const Rational& c) const {
    MatrixSeries out(N_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].scaled(c);
    return out;
}

MatrixSeries MatrixSeries::derivative(int copy, int component, int order) const {
    MatrixSeries out(N_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].derivative(copy, component, order);
    return out;
}

MatrixSeries MatrixSeries::restricted(int d0, int d1) const {
    MatrixSeries out(N_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].restricted(d0, d1);
    return out;
}

bool MatrixSeries::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const TimePolynomial& p) { return p.is_zero(); });
}

bool MatrixSeries::operator==(const MatrixSeries& o) const {
    return N_ == o.N_ && e_ == o.e_;
}

long MatrixSeries::monomial_count() const {
    long n = 0;
    for (auto& p : e_) n += static_cast<long>(p.term_count());
    return n;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    check_dims(N_, o.N_, "laurent matrix add");
    LaurentMatrix out(N_, e_.empty() ? Symbol::z : e_[0].symbol());
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    check_dims(N_, o.N_, "laurent matrix sub");
    LaurentMatrix out(N_, e_.empty() ? Symbol::z : e_[0].symbol());
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
    LaurentMatrix out = *this;
    for (auto& p : out.e_) p = p.shifted(k);
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const Rational& c) const {
    LaurentMatrix out = *this;
    for (auto& p : out.e_) p = p.scaled(c);
    return out;
}

LaurentMatrix LaurentMatrix::deepened() const {
    LaurentMatrix out = *this;
    for (auto& p : out.e_) p = p.with_bounds(-LaurentPolynomial::unbounded, p.ceil());
    return out;
}

LaurentMatrix LaurentMatrix::time_derivative(int copy, int component, int order) const {
    LaurentMatrix out = *this;
    for (auto& p : out.e_) p = p.time_derivative(copy, component, order);
    return out;
}

LaurentMatrix LaurentMatrix::restricted(int d0, int d1) const {
    LaurentMatrix out = *this;
    for (auto& p : out.e_) p = p.restricted(d0, d1);
    return out;
}

long LaurentMatrix::monomial_count() const {
    long n = 0;
    for (auto& p : e_) n += p.monomial_count();
    return n;
}

bool LaurentMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPolynomial& p) { return p.is_zero(); });
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    return N_ == o.N_ && e_ == o.e_;
}

LaurentMatrix operator*(const MatrixSeries& m, const LaurentMatrix& f) {
    check_dims(m.dim(), f.dim(), "matrix * laurent");
    int N = m.dim();
    LaurentMatrix out(N, f.at(1, 1).symbol());
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            LaurentPolynomial acc(f.at(1, 1).symbol(), -LaurentPolynomial::unbounded);
            for (int c = 1; c <= N; ++c) acc = acc + m.at(a, c) * f.at(c, b);
            out.at(a, b) = acc;
        }
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& f, const MatrixSeries& m) {
    check_dims(f.dim(), m.dim(), "laurent * matrix");
    int N = m.dim();
    LaurentMatrix out(N, f.at(1, 1).symbol());
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            LaurentPolynomial acc(f.at(1, 1).symbol(), -LaurentPolynomial::unbounded);
            for (int c = 1; c <= N; ++c) acc = acc + m.at(c, b) * f.at(a, c);
            out.at(a, b) = acc;
        }
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& f, const LaurentMatrix& g) {
    check_dims(f.dim(), g.dim(), "laurent matrix mul");
    int N = f.dim();
    LaurentMatrix out(N, f.at(1, 1).symbol());
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            LaurentPolynomial acc(f.at(1, 1).symbol(), -LaurentPolynomial::unbounded);
            for (int c = 1; c <= N; ++c) acc = acc + f.at(a, c) * g.at(c, b);
            out.at(a, b) = acc;
        }
    return out;
}

bool PseudoDiffOp::empty() const {
    for (auto& [k, tab] : terms)
        if (!tab.empty()) return false;
    return true;
}

int PseudoDiffOp::min_shift() const {
    if (terms.empty()) return 0;
    return terms.begin()->first;
}

int PseudoDiffOp::max_shift() const {
    if (terms.empty()) return 0;
    return terms.rbegin()->first;
}

std::vector<int> PseudoDiffOp::common_sectors() const {
    std::vector<int> out;
    if (terms.empty()) return out;
    for (auto& [p, M] : terms.begin()->second) {
        bool every = true;
        for (auto& [k, tab] : terms)
            if (!tab.count(p)) { every = false; break; }
        if (every) out.push_back(p);
    }
    return out;
}

long PseudoDiffOp::monomial_count() const {
    long n = 0;
    for (auto& [k, tab] : terms)
        for (auto& [p, M] : tab) n += M.monomial_count();
    return n;
}

PseudoDiffOp pdo_identity(int N, int p_lo, int p_hi, Caps caps) {
    PseudoDiffOp A;
    A.N = N;
    for (int p = p_lo; p <= p_hi; ++p) A.terms[0][p] = MatrixSeries::identity(N, caps);
    return A;
}

PseudoDiffOp pdo_shift_op(int m, int N, int p_lo, int p_hi, Caps caps) {
    PseudoDiffOp A;
    A.N = N;
    for (int p = p_lo; p <= p_hi; ++p) A.terms[-m][p] = MatrixSeries::identity(N, caps);
    return A;
}

PseudoDiffOp pdo_unit_shift_op(int alpha, int m, int N, int p_lo, int p_hi, Caps caps) {
    PseudoDiffOp A;
    A.N = N;
    for (int p = p_lo; p <= p_hi; ++p) A.terms[-m][p] = MatrixSeries::unit(N, alpha, caps);
    return A;
}

PseudoDiffOp pdo_add(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    if (A.N != B.N) throw ConfigError("pdo_add: dimension mismatch");
    PseudoDiffOp out;
    out.N = A.N;
    out.terms = A.terms;
    for (auto& [k, tab] : B.terms)
        for (auto& [p, M] : tab) {
            auto [it, fresh] = out.terms[k].emplace(p, M);
            if (!fresh) it->second = it->second + M;
        }
    return out;
}

PseudoDiffOp pdo_scale(const PseudoDiffOp& A, const Rational& c) {
    PseudoDiffOp out;
    out.N = A.N;
    for (auto& [k, tab] : A.terms)
        for (auto& [p, M] : tab) out.terms[k].emplace(p, M.scaled(c));
    return out;
}

PseudoDiffOp pdo_time_derivative(const PseudoDiffOp& A, int copy, int component, int order) {
    PseudoDiffOp out;
    out.N = A.N;
    for (auto& [k, tab] : A.terms)
        for (auto& [p, M] : tab) out.terms[k].emplace(p, M.derivative(copy, component, order));
    return out;
}

PseudoDiffOp pdo_mul(const PseudoDiffOp& A, const PseudoDiffOp& B, int K_trunc) {
    if (A.N != B.N) throw ConfigError("pdo_mul: dimension mismatch");
    PseudoDiffOp out;
    out.N = A.N;
    if (A.terms.empty() || B.terms.empty()) return out;
    int kmin = A.min_shift() + B.min_shift();
    for (int m = kmin; m <= K_trunc; ++m) {
        // the splits k1 + k2 = m with both shifts structurally present
        std::vector<std::pair<int, int>> splits;
        for (auto& [k1, tab] : A.terms)
            if (B.terms.count(m - k1)) splits.emplace_back(k1, m - k1);
        if (splits.empty()) continue;
        std::set<int> cands;
        for (auto& [k1, k2] : splits)
            for (auto& [p, M] : A.terms.at(k1)) cands.insert(p);
        for (int p : cands) {
            MatrixSeries acc(A.N);
            bool ok = true;
            for (auto& [k1, k2] : splits) {
                auto& ta = A.terms.at(k1);
                auto& tb = B.terms.at(k2);
                auto ia = ta.find(p);
                auto ib = tb.find(p - k1);
                if (ia == ta.end() || ib == tb.end()) { ok = false; break; }
                acc = acc + ia->second * ib->second;
            }
            if (ok) out.terms[m][p] = acc;
        }
    }
    if (out.empty())
        throw ConfigError("pdo_mul: sector window exhausted (shift reach " +
                          std::to_string(std::max(std::abs(A.min_shift()), A.max_shift()) +
                                         std::max(std::abs(B.min_shift()), B.max_shift())) +
                          "); enlarge the tau sector range");
    return out;
}

PseudoDiffOp pdo_project(const PseudoDiffOp& A, ProjPart part) {
    PseudoDiffOp out;
    out.N = A.N;
    for (auto& [k, tab] : A.terms)
        if ((part == ProjPart::plus) == (k <= 0)) out.terms.emplace(k, tab);
    return out;
}

PseudoDiffOp pdo_invert(const PseudoDiffOp& A, int K_trunc) {
    if (A.min_shift() < 0 || !A.terms.count(0))
        throw ConfigError("pdo_invert: operator must be I + negative-power terms");
    Caps caps;
    for (auto& [p, M] : A.terms.at(0)) {
        for (int a = 1; a <= A.N; ++a) {
            caps = M.at(a, a).caps();
            for (int b = 1; b <= A.N; ++b) {
                const TimePolynomial& e = M.at(a, b);
                bool diag_one = (a == b) && e.term_count() == 1 && e.constant_term() == 1;
                if (a == b ? !diag_one : !e.is_zero())
                    throw ConfigError("pdo_invert: leading coefficient is not the identity");
            }
        }
    }
    PseudoDiffOp X;
    X.N = A.N;
    for (auto& [p, M] : A.terms.at(0)) X.terms[0][p] = MatrixSeries::identity(A.N, caps);
    for (int m = 1; m <= K_trunc; ++m) {
        for (auto& [p, I0] : X.terms.at(0)) {
            MatrixSeries acc(A.N);
            bool ok = true;
            for (int k = 1; k <= m; ++k) {
                auto ita = A.terms.find(k);
                bool known_zero = ita == A.terms.end();
                auto itx = X.terms.find(m - k);
                if (itx == X.terms.end() || !itx->second.count(p - k)) { ok = false; break; }
                if (!known_zero) {
                    auto ip = ita->second.find(p);
                    if (ip == ita->second.end()) { ok = false; break; }
                    acc = acc + ip->second * itx->second.at(p - k);
                }
            }
            if (ok) X.terms[m][p] = acc.scaled(-1);
        }
    }
    return X;
}

PseudoDiffOp prune_zero_shifts(const PseudoDiffOp& A) {
    PseudoDiffOp out;
    out.N = A.N;
    for (auto& [k, tab] : A.terms) {
        bool all_zero = true;
        for (auto& [p, M] : tab)
            if (!M.is_zero()) { all_zero = false; break; }
        if (!all_zero) out.terms.emplace(k, tab);
    }
    return out;
}

AgreementReport pdo_common_agreement(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    AgreementReport r;
    for (auto& [k, tab] : A.terms) {
        auto kb = B.terms.find(k);
        if (kb == B.terms.end()) continue;
        for (auto& [p, M] : tab) {
            auto pb = kb->second.find(p);
            if (pb == kb->second.end()) continue;
            ++r.compared;
            if (!(M == pb->second)) r.agree = false;
        }
    }
    return r;
}

const LaurentMatrix& WaveSymbolFamily::at(int p) const {
    auto it = sectors.find(p);
    if (it == sectors.end())
        throw ConfigError("wave symbol family has no sector p = " + std::to_string(p));
    return it->second;
}

WaveSymbolFamily pdo_apply(const PseudoDiffOp& A, const WaveSymbolFamily& F) {
    if (A.N != F.N) throw ConfigError("pdo_apply: dimension mismatch");
    WaveSymbolFamily out;
    out.N = F.N;
    for (auto& [p, G] : F.sectors) {
        LaurentMatrix acc(F.N, G.at(1, 1).symbol());
        bool ok = true;
        for (auto& [k, tab] : A.terms) {
            auto ia = tab.find(p);
            auto ig = F.sectors.find(p - k);
            if (ia == tab.end() || ig == F.sectors.end()) { ok = false; break; }
            acc = acc + ia->second * ig->second.deepened();
        }
        if (ok) out.sectors.emplace(p, acc);
    }
    if (out.sectors.empty() && !F.sectors.empty())
        throw ConfigError("pdo_apply: no sector has all shifted evaluations "
                          "available; enlarge the tau sector range");
    return out;
}

WaveSymbolFamily pdo_left_apply(const WaveSymbolFamily& F, const PseudoDiffOp& A) {
    if (A.N != F.N) throw ConfigError("pdo_left_apply: dimension mismatch");
    WaveSymbolFamily out;
    out.N = F.N;
    if (F.sectors.empty()) return out;
    int p_min = F.sectors.begin()->first - std::max(A.max_shift(), 0);
    int p_max = F.sectors.rbegin()->first - std::min(A.min_shift(), 0);
    for (int p = p_min; p <= p_max; ++p) {
        LaurentMatrix acc(F.N, F.sectors.begin()->second.at(1, 1).symbol());
        bool ok = true;
        for (auto& [k, tab] : A.terms) {
            auto ia = tab.find(p + k);
            auto ig = F.sectors.find(p + k);
            if (ia == tab.end() || ig == F.sectors.end()) { ok = false; break; }
            acc = acc + ig->second.deepened() * ia->second;
        }
        if (ok) out.sectors.emplace(p, acc);
    }
    if (out.sectors.empty())
        throw ConfigError("pdo_left_apply: no sector has all shifted evaluations "
                          "available; enlarge the tau sector range");
    return out;
}

} // namespace mmkp
