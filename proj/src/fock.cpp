#include "mmkp/fock.hpp"

#include <bit>

namespace mmkp {

void validate_window(const ModeWindow& w) {
    if (!(w.lo < 0 && 0 <= w.hi))
        throw ConfigError("mode window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                          ") must satisfy lo < 0 <= hi");
}

int slot_of(const ModeWindow& w, int alpha, int j) {
    return (alpha - 1) * w.size() + (j - w.lo);
}

FockState sea_state(const ModeWindow& w, int N) {
    FockState s = 0;
    for (int a = 1; a <= N; ++a)
        for (int j = w.lo; j < 0; ++j)
            s |= FockState(1) << slot_of(w, a, j);
    return s;
}

bool occupied(FockState s, const ModeWindow& w, int alpha, int j) {
    return (s >> slot_of(w, alpha, j)) & 1;
}

std::vector<int> occupied_modes(FockState s, const ModeWindow& w, int alpha) {
    std::vector<int> out;
    for (int j = w.lo; j < w.hi; ++j)
        if (occupied(s, w, alpha, j)) out.push_back(j);
    return out;
}

int component_charge(FockState s, const ModeWindow& w, int alpha) {
    int n = 0;
    for (int j = w.lo; j < w.hi; ++j)
        if (occupied(s, w, alpha, j)) ++n;
    return n - (-w.lo);
}

FockVector::FockVector(ModeWindow w, int N, Caps caps) : w_(w), N_(N), caps_(caps) {
    validate_window(w);
    if (N < 1) throw ConfigError("need at least one component");
    if (N * w.size() > 64)
        throw ConfigError("mode window too large: " + std::to_string(N * w.size()) +
                          " slots exceed the 64-slot state representation");
}

void FockVector::add(FockState s, const TimePolynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TimePolynomial FockVector::coefficient(FockState s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? TimePolynomial{} : it->second;
}

void FockVector::merge(const FockVector& o) {
    if (!(w_ == o.w_) || N_ != o.N_)
        throw ConfigError("merging Fock vectors over different mode windows");
    for (auto& [s, c] : o.terms_) add(s, c);
}

FockVector FockVector::scaled(const Rational& c) const {
    FockVector out(w_, N_, caps_);
    if (c == 0) return out;
    for (auto& [s, q] : terms_) out.terms_.emplace(s, q.scaled(c));
    return out;
}

bool FockVector::operator==(const FockVector& o) const {
    return w_ == o.w_ && N_ == o.N_ && terms_ == o.terms_;
}

namespace {

int koszul_parity(FockState s, int slot) {
    return std::popcount(s & ((FockState(1) << slot) - 1)) & 1;
}

} // namespace

FockVector apply_fermion(FermionKind kind, int alpha, int j, const FockVector& v) {
    const ModeWindow& w = v.window();
    if (!w.contains(j))
        throw ConfigError("fermion mode " + std::to_string(j) + " outside window [" +
                          std::to_string(w.lo) + "," + std::to_string(w.hi) + ")");
    if (alpha < 1 || alpha > v.components())
        throw ConfigError("component index out of range");
    int slot = slot_of(w, alpha, j);
    FockState bit = FockState(1) << slot;
    FockVector out(w, v.components(), v.caps());
    for (auto& [s, c] : v.terms()) {
        bool occ = s & bit;
        if ((kind == FermionKind::psi) == occ) continue;  // psi^2 = (psi*)^2 = 0
        out.add(s ^ bit, koszul_parity(s, slot) ? -c : c);
    }
    return out;
}

FockVector vacuum(const ChargeVector& p, const ModeWindow& w, Caps caps) {
    int N = p.components();
    for (int a = 1; a <= N; ++a)
        if (p.at(a) < w.lo || p.at(a) > w.hi)
            throw ConfigError("vacuum charge " + std::to_string(p.at(a)) +
                              " not representable in window [" + std::to_string(w.lo) + "," +
                              std::to_string(w.hi) + ")");
    FockVector v(w, N, caps);
    v.add(sea_state(w, N), TimePolynomial::constant(1, caps));
    // |p> = Psi*^{(N)}_{p_N} ... Psi*^{(1)}_{p_1} |0>, rightmost factor first
    for (int a = 1; a <= N; ++a) {
        int q = p.at(a);
        if (q > 0)
            for (int j = 0; j < q; ++j) v = apply_fermion(FermionKind::psi, a, j, v);
        else
            for (int j = -1; j >= q; --j) v = apply_fermion(FermionKind::psi_star, a, j, v);
    }
    return v;
}

TimePolynomial dual_pairing(const ChargeVector& p, const FockVector& v) {
    FockVector cur = v;
    int N = p.components();
    if (N != v.components()) throw ConfigError("charge vector arity mismatch");
    // <p| = the conjugate product of the vacuum's, applied factor by factor
    for (int a = N; a >= 1; --a) {
        int q = p.at(a);
        if (q > 0)
            for (int j = q - 1; j >= 0; --j) cur = apply_fermion(FermionKind::psi_star, a, j, cur);
        else
            for (int j = q; j < 0; ++j) cur = apply_fermion(FermionKind::psi, a, j, cur);
    }
    return cur.coefficient(sea_state(v.window(), v.components()));
}

FockVector apply_current(int alpha, int k, const FockVector& v) {
    if (k < 1) throw ConfigError("current mode k must be >= 1");
    const ModeWindow& w = v.window();
    if (alpha < 1 || alpha > v.components())
        throw ConfigError("component index out of range");
    FockVector out(w, v.components(), v.caps());
    for (auto& [s, c] : v.terms()) {
        for (int j = w.lo; j + k < w.hi; ++j) {
            int s_from = slot_of(w, alpha, j + k), s_to = slot_of(w, alpha, j);
            FockState b_from = FockState(1) << s_from, b_to = FockState(1) << s_to;
            if (!(s & b_from) || (s & b_to)) continue;
            FockState mid = s ^ b_from;
            int par = koszul_parity(s, s_from) ^ koszul_parity(mid, s_to);
            out.add(mid | b_to, par ? -c : c);
        }
    }
    return out;
}

FockVector apply_exp_J(int K_t, int D, const FockVector& v) {
    if (K_t < 1) throw ConfigError("need K_t >= 1");
    if (D < 0) throw ConfigError("negative truncation degree");
    FockVector total = v;
    FockVector cur = v;
    for (int n = 1; n <= D && !cur.is_zero(); ++n) {
        FockVector next(v.window(), v.components(), v.caps());
        for (int a = 1; a <= v.components(); ++a) {
            for (int k = 1; k <= K_t; ++k) {
                FockVector jv = apply_current(a, k, cur);
                if (jv.is_zero()) continue;
                TimePolynomial t = TimePolynomial::variable(0, a, k, v.caps(), Rational(1, n));
                for (auto& [s, c] : jv.terms()) next.add(s, c * t);
            }
        }
        cur = next;
        total.merge(cur);
    }
    return total;
}

} // namespace mmkp
