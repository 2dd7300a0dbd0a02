#pragma once

#include "mmkp/clifford.hpp"

#include <map>
#include <tuple>

namespace mmkp {

// tau_{alpha beta}(p, t) = <p + e_alpha - e_beta| e^{J(t)} g |p>, exact through
// degree D. A charge-sector mismatch gives the zero polynomial.
TimePolynomial tau(const ChargeVector& p, int alpha, int beta, const CliffordSpec& g,
                   const ModeWindow& w, int K_t, int D, Caps caps);

// Per-sector tau data over scalar charges p (charge vector (p, ..., p)):
// diagonal tau^p and off-diagonal tau^p_{alpha beta}.
struct TauTable {
    int N = 1;
    int p_lo = 0;
    int p_hi = 0;
    int D = 3;
    int K_t = 3;
    ModeWindow window;
    Caps caps;
    CliffordSpec g;
    std::map<int, TimePolynomial> diag;
    std::map<std::tuple<int, int, int>, TimePolynomial> off;

    bool has(int p) const { return p_lo <= p && p <= p_hi; }
    const TimePolynomial& at(int p) const;
    const TimePolynomial& at(int p, int alpha, int beta) const;

    // deepest weighted degree sum(k*e) over any single component in any entry:
    // Miwa shifts and wave coefficients terminate past this depth
    int miwa_depth() const;
    int max_plain_degree() const;
};

// Rows p_lo..p_hi; requires window.lo <= p_lo - 1 and window.hi >= p_hi + 1
// (dual states reach p +- 1).
TauTable tau_table(int p_lo, int p_hi, const CliffordSpec& g, const ModeWindow& w,
                   int N, int K_t, int D, Caps caps);

// Compares full tables between a window and an enlargement (rows chosen as the
// widest range w1 admits); true iff every entry agrees coefficient-exactly.
bool window_stability_check(const CliffordSpec& g, int D, const ModeWindow& w1,
                            const ModeWindow& w2, int N, int K_t, Caps caps);

} // namespace mmkp
