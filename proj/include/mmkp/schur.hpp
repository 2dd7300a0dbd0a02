#pragma once

#include "mmkp/laurent.hpp"

#include <vector>

namespace mmkp {

// h_0..h_K for an arbitrary weighted alphabet: letters[j-1] is the weight-j
// letter g_j (missing/short list = zero letters). Recurrence
//   k h_k = sum_{j<=k} j g_j h_{k-j},
// which is d/dz log of the generating function exp(sum g_j z^j).
std::vector<TimePolynomial> schur_polynomials(int K, const std::vector<TimePolynomial>& letters,
                                              Caps caps);

// h_0..h_K of the time alphabet scale * t_{gamma,*} (orders 1..K_t) in one copy.
std::vector<TimePolynomial> schur_time_alphabet(int K, int copy, int gamma, int K_t,
                                                Caps caps, const Rational& scale = Rational(1));

// h_k(sign * dtilde_gamma) P with dtilde = {d_1, d_2/2, d_3/3, ...}; the
// Miwa-shift Taylor coefficient. Same recurrence, letters = (sign/j) d_{gamma,j}.
TimePolynomial schur_derivative_action(int k, int copy, int gamma, const TimePolynomial& P,
                                       int sign, int K_t);

// P(t +- [symbol^-1]_gamma) as a Laurent polynomial with floor -Z_max:
// coefficient of symbol^0 is P, of symbol^{-k} is h_k(+-dtilde_gamma) P.
// Substitution route: replace t_{gamma,k} by t_{gamma,k} +- symbol^{-k}/k.
LaurentPolynomial miwa_shift_substitution(const TimePolynomial& P, int copy, int gamma,
                                          int sign, Symbol sym, int Z_max, int K_t);
// Derivative route: assemble the h_k(+-dtilde) coefficients directly.
LaurentPolynomial miwa_shift_schur(const TimePolynomial& P, int copy, int gamma,
                                   int sign, Symbol sym, int Z_max, int K_t);
// The operation used by the checks (substitution route; the two routes are
// asserted equal in tests).
LaurentPolynomial miwa_shift(const TimePolynomial& P, int copy, int gamma,
                             int sign, Symbol sym, int Z_max, int K_t);

// exp(xi(t_gamma - t'_gamma, z)) = sum_k h_k(t_gamma - t'_gamma) z^k with the
// difference alphabet taken across copies (copy_t minus copy_tp), truncated by
// the caps; z-support [0, z_top].
LaurentPolynomial xi_exponential_diff(int copy_t, int copy_tp, int gamma, int K_t,
                                      int z_top, Caps caps, Symbol sym = Symbol::z);

// exp(sign * xi(t_gamma, z)) for a single copy.
LaurentPolynomial xi_exponential(int copy, int gamma, int sign, int K_t,
                                 int z_top, Caps caps, Symbol sym = Symbol::z);

} // namespace mmkp
