#pragma once

#include "mmkp/psdo.hpp"
#include "mmkp/schur.hpp"
#include "mmkp/sign_table.hpp"
#include "mmkp/tau.hpp"

namespace mmkp {

// w^{(k)}(p), v^{(k)}(p): diagonal entries h_k(-/+ dtilde) tau^p / tau^p,
// off-diagonal eps * h_{k-1}(-/+ dtilde) tau^p_{ab} / tau^p, w^{(0)} = v^{(0)} = I.
struct WaveCoefficients {
    int N = 0;
    int k_max = 0;
    std::map<int, std::vector<MatrixSeries>> w, v;  // sector p -> [k = 0..k_max]
};

WaveCoefficients wave_coefficients(const TauTable& T, int k_max);

// 1/tau^p as an exact series through the caps; throws on zero constant term
TimePolynomial tau_inverse(const TauTable& T, int p);

TimePolynomial wave_w_entry(const TauTable& T, int p, int a, int b, int k);
TimePolynomial wave_v_entry(const TauTable& T, int p, int a, int b, int k);
MatrixSeries wave_w_matrix(const TauTable& T, int p, int k);
MatrixSeries wave_v_matrix(const TauTable& T, int p, int k);

// v^{(1)}(p) = -w^{(1)}(p) for every sector
bool first_coefficient_antisymmetry_check(const TauTable& T);

struct WaveOperators {
    PseudoDiffOp W;              // I + sum w^{(k)}(p) e^{-k dp}
    PseudoDiffOp W_inv_paper;    // sum e^{-k dp} v^{(k)}(p+1), as stored coefficients
    PseudoDiffOp W_inv_generic;  // order-by-order solution of W X = I
};

WaveOperators build_wave_operator(const TauTable& T, int K_trunc);

} // namespace mmkp
