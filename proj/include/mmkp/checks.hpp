#pragma once

#include "mmkp/baker.hpp"

#include <vector>

namespace mmkp {

// Deliberate defects for negative-control runs: flip one sign factor, or bump
// one coefficient of the exponential kernel. Either must produce a nonzero
// bilinear residual.
enum class Corruption { none, flip_eps, bump_schur };

// Residual of the n >= 0 bilinear identity at charge p, in the doubled time
// alphabet (t = copy 0, t' = copy 1). Zero through per-copy degree D - 1.
TimePolynomial check_bilinear_identity(const TauTable& T, int n, int alpha, int beta,
                                       int p, int Z_max,
                                       Corruption corruption = Corruption::none);

enum class HirotaId { H8, H9, H10, H11 };
const char* hirota_name(HirotaId id);

// Residual in one or two formal shift symbols, keyed (mu exponent, nu
// exponent); single-symbol identities live at nu exponent 0.
struct BiLaurent {
    std::map<std::pair<int, int>, TimePolynomial> terms;

    void add(int e_mu, int e_nu, const TimePolynomial& q);
    // nonzero monomials of degree <= d_check at keys whose pole order in each
    // symbol is at most order_bound
    long monomials_within(int d_check, int order_bound) const;
};

// idx: H8 takes (alpha, beta, gamma), H9/H10 (alpha, beta), H11 (alpha, gamma);
// the indices each equation requires distinct are validated.
BiLaurent check_hirota(const TauTable& T, HirotaId which, const std::vector<int>& idx,
                       int p, int Z_max);

// A_{alpha m} = (W E_alpha e^{m dp} W^{-1}) split into projections; plus is the
// flow generator proper. alpha = 0 selects the matrix flow (sum E_alpha = I).
struct FlowGenerator {
    PseudoDiffOp plus, minus;
};
FlowGenerator flow_generator(const WaveOperators& ops, int alpha, int m, int K_trunc);
PseudoDiffOp flow_generator(const TauTable& T, int alpha, int m, int K_trunc);

// L = W e^{dp} W^{-1} through shift order K_trunc
PseudoDiffOp lax_operator(const WaveOperators& ops, int K_trunc);

// Every residual below is already restricted to its contract window, so a
// passing check is exactly `is_zero()` on the result.

// d_{t_1} Psi^p - Psi^{p+1} - (w1(p) - w1(p+1)) Psi^p with d_{t_1} the sum of
// per-component derivatives; adjoint direction mirrored. Degree <= D - 1.
WaveSymbolFamily check_linear_problem_t1(const TauTable& T, bool adjoint);

struct FlowEquationResiduals {
    WaveSymbolFamily flow;  // d_{t_{alpha m}} Psi - A_+ Psi, degree <= D - 1
    PseudoDiffOp sato;      // d_{t_{alpha m}} W + (A_- W), degree <= D - 1
};
FlowEquationResiduals check_flow_equations(const TauTable& T, int alpha, int m,
                                           int K_trunc);

// L Psi - z Psi on sectors where every stored shift of L evaluates; no
// derivative enters, so the residual is exact through degree D
WaveSymbolFamily check_z_eigenvalue(const TauTable& T, int K_trunc);

// d_{t_{alpha m}} L - [A_{alpha m}, L] through shifts k <= K_trunc - m - 1,
// degree <= D - 1
PseudoDiffOp check_lax_equation(const TauTable& T, int alpha, int m, int K_trunc);

// d_{(alpha2 m2)} A_1 - d_{(alpha1 m1)} A_2 + [A_1, A_2] through shifts
// k <= K_trunc - 1, degree <= D - 1
PseudoDiffOp check_zero_curvature(const TauTable& T, int alpha1, int m1,
                                  int alpha2, int m2, int K_trunc);

// N x N matrix of residues of Psi(p, t) Psi^dagger(p', t'); requires p >= p'.
// Doubled alphabet, degree <= D - 1 per copy.
MatrixSeries check_ba_bilinear_pairing(const TauTable& T, int p, int p_prime, int Z_max);

} // namespace mmkp
