#pragma once

#include "mmkp/time_poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mmkp {

// Mode window [lo, hi), identical for every component. Modes j < 0 are the
// filled Dirac sea of |0>.
struct ModeWindow {
    int lo = -2;
    int hi = 2;
    int size() const { return hi - lo; }
    bool contains(int j) const { return lo <= j && j < hi; }
    bool operator==(const ModeWindow&) const = default;
};

void validate_window(const ModeWindow& w);  // lo < 0 <= hi

struct ChargeVector {
    std::vector<int> p;  // p[alpha-1], alpha = 1..N
    static ChargeVector uniform(int N, int value) { return {std::vector<int>(N, value)}; }
    int components() const { return static_cast<int>(p.size()); }
    int at(int alpha) const { return p[alpha - 1]; }
};

// Basis states are bitmasks over canonical slots: component-major, mode
// ascending, slot = (alpha-1)*size + (j-lo). The Koszul sign of an operator
// acting at a slot is the parity of occupied slots strictly before it.
using FockState = std::uint64_t;

int slot_of(const ModeWindow& w, int alpha, int j);
FockState sea_state(const ModeWindow& w, int N);
bool occupied(FockState s, const ModeWindow& w, int alpha, int j);
std::vector<int> occupied_modes(FockState s, const ModeWindow& w, int alpha);
// #occupied(alpha) - #{j < 0 in window}
int component_charge(FockState s, const ModeWindow& w, int alpha);

class FockVector {
public:
    FockVector() = default;
    FockVector(ModeWindow w, int N, Caps caps);

    const ModeWindow& window() const { return w_; }
    int components() const { return N_; }
    Caps caps() const { return caps_; }
    const std::map<FockState, TimePolynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(FockState s, const TimePolynomial& c);
    TimePolynomial coefficient(FockState s) const;
    void merge(const FockVector& o);  // += (same window/N required)
    FockVector scaled(const Rational& c) const;
    bool operator==(const FockVector& o) const;

private:
    ModeWindow w_;
    int N_ = 1;
    Caps caps_;
    std::map<FockState, TimePolynomial> terms_;
};

enum class FermionKind { psi, psi_star };  // psi creates, psi* annihilates

FockVector apply_fermion(FermionKind kind, int alpha, int j, const FockVector& v);

// |p>: component alpha occupied on {lo, ..., p_alpha - 1}, sign from expanding
// the defining operator product against the canonical ordering
FockVector vacuum(const ChargeVector& p, const ModeWindow& w, Caps caps);

// <p | v>
TimePolynomial dual_pairing(const ChargeVector& p, const FockVector& v);

// J_k^{(alpha)} v = sum_j psi_j psi*_{j+k} v, window-internal terms only
FockVector apply_current(int alpha, int k, const FockVector& v);

// sum_{n <= D} J(t)^n / n! applied to v, J(t) = sum_{alpha, k <= K_t} t_{alpha,k} J_k
FockVector apply_exp_J(int K_t, int D, const FockVector& v);

} // namespace mmkp
