#pragma once

#include "mmkp/wave.hpp"

namespace mmkp {

// Baker-Akhiezer family: Psi^p_{ab} (or the adjoint Psi^{+p}_{ab}) as Laurent
// matrices in z over the table's sectors.
struct BakerFunction {
    WaveSymbolFamily family;
    bool adjoint = false;
    int z_order = 0;  // top retained exponential order
    int Z_max = 0;
    int D = 0;
    int copy = 0;  // time-alphabet copy the family lives in
};

// Direct construction: eps * [shifted tau / tau] * z^{pref} * exp(+-xi), with
// the Miwa shift t -+ [z^{-1}] in component b (resp. a for the adjoint) and
// pref = p + delta_{ab} - 1 (resp. -p + delta_{ab} - 1).
BakerFunction baker_akhiezer(const TauTable& T, bool adjoint, int z_order, int Z_max,
                             int copy = 0);

// Series construction: (sum_k coeff^{(k)} z^{-k}) z^{+-p} exp(+-xi) with the
// wave coefficients; equals the direct construction coefficient-for-coefficient.
BakerFunction baker_akhiezer_series(const TauTable& T, bool adjoint, int z_order, int Z_max);

} // namespace mmkp
