#include "mmkp/schur.hpp"

namespace mmkp {

std::vector<TimePolynomial> schur_polynomials(int K, const std::vector<TimePolynomial>& letters,
                                              Caps caps) {
    if (K < 0) throw ConfigError("schur_polynomials: negative K");
    std::vector<TimePolynomial> h;
    h.reserve(K + 1);
    h.push_back(TimePolynomial::constant(1, caps));
    for (int k = 1; k <= K; ++k) {
        TimePolynomial acc(caps);
        for (int j = 1; j <= k; ++j) {
            if (j - 1 >= static_cast<int>(letters.size())) break;
            if (letters[j - 1].is_zero()) continue;
            acc = acc + (letters[j - 1] * h[k - j]).scaled(j);
        }
        h.push_back(acc.scaled(Rational(1, k)));
    }
    return h;
}

std::vector<TimePolynomial> schur_time_alphabet(int K, int copy, int gamma, int K_t,
                                                Caps caps, const Rational& scale) {
    std::vector<TimePolynomial> letters;
    for (int j = 1; j <= K_t; ++j)
        letters.push_back(TimePolynomial::variable(copy, gamma, j, caps, scale));
    return schur_polynomials(K, letters, caps);
}

TimePolynomial schur_derivative_action(int k, int copy, int gamma, const TimePolynomial& P,
                                       int sign, int K_t) {
    if (k < 0) throw ConfigError("schur_derivative_action: negative k");
    // A_k = h_k(sign*dtilde) P via k A_k = sum_j sign * d_{gamma,j} A_{k-j}
    // (the j-weights of dtilde cancel the recurrence's j factor).
    std::vector<TimePolynomial> A{P};
    for (int kk = 1; kk <= k; ++kk) {
        TimePolynomial acc(P.caps());
        for (int j = 1; j <= kk && j <= K_t; ++j) {
            TimePolynomial d = A[kk - j].derivative(copy, gamma, j);
            acc = sign > 0 ? acc + d : acc - d;
        }
        A.push_back(acc.scaled(Rational(1, kk)));
    }
    return A[k];
}

LaurentPolynomial miwa_shift_substitution(const TimePolynomial& P, int copy, int gamma,
                                          int sign, Symbol sym, int Z_max, int K_t) {
    if (Z_max < 0) throw ConfigError("miwa_shift: negative Z_max");
    LaurentPolynomial out(sym, -Z_max, 0);
    VarId lo = var_id(copy, gamma, 1), hi = var_id(copy, gamma, K_t);
    for (auto& [m, c] : P.terms()) {
        // expand each t_{gamma,k}^e factor as (t + sign*sym^{-k}/k)^e
        LaurentPolynomial term = LaurentPolynomial::mono(
            sym, 0, TimePolynomial::constant(c, P.caps()), -Z_max, 0);
        for (auto& [v, e] : m) {
            if (v < lo || v > hi) {
                Monomial single{{v, e}};
                TimePolynomial f(P.caps());
                f.add_term(single, 1);
                term = term * LaurentPolynomial::mono(sym, 0, f, -Z_max, 0);
                continue;
            }
            int k = var_of(v).order;
            LaurentPolynomial base(sym, -Z_max, 0);
            base.add_term(0, TimePolynomial::variable(copy, gamma, k, P.caps()));
            base.add_term(-k, TimePolynomial::constant(Rational(sign, k), P.caps()));
            for (int rep = 0; rep < e; ++rep) term = term * base;
        }
        out = out + term;
    }
    return out;
}

LaurentPolynomial miwa_shift_schur(const TimePolynomial& P, int copy, int gamma,
                                   int sign, Symbol sym, int Z_max, int K_t) {
    if (Z_max < 0) throw ConfigError("miwa_shift: negative Z_max");
    LaurentPolynomial out(sym, -Z_max, 0);
    for (int k = 0; k <= Z_max; ++k)
        out.add_term(-k, schur_derivative_action(k, copy, gamma, P, sign, K_t));
    return out;
}

LaurentPolynomial miwa_shift(const TimePolynomial& P, int copy, int gamma,
                             int sign, Symbol sym, int Z_max, int K_t) {
    return miwa_shift_substitution(P, copy, gamma, sign, sym, Z_max, K_t);
}

LaurentPolynomial xi_exponential_diff(int copy_t, int copy_tp, int gamma, int K_t,
                                      int z_top, Caps caps, Symbol sym) {
    std::vector<TimePolynomial> letters;
    for (int j = 1; j <= K_t; ++j)
        letters.push_back(TimePolynomial::variable(copy_t, gamma, j, caps) -
                          TimePolynomial::variable(copy_tp, gamma, j, caps));
    auto h = schur_polynomials(z_top, letters, caps);
    LaurentPolynomial out(sym, 0, z_top);
    for (int k = 0; k <= z_top; ++k) out.add_term(k, h[k]);
    return out;
}

LaurentPolynomial xi_exponential(int copy, int gamma, int sign, int K_t,
                                 int z_top, Caps caps, Symbol sym) {
    auto h = schur_time_alphabet(z_top, copy, gamma, K_t, caps, Rational(sign));
    LaurentPolynomial out(sym, 0, z_top);
    for (int k = 0; k <= z_top; ++k) out.add_term(k, h[k]);
    return out;
}

} // namespace mmkp
