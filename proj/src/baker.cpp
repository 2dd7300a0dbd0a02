#include "mmkp/baker.hpp"

#include "mmkp/sign_table.hpp"

namespace mmkp {

namespace {

void validate(const TauTable& T, int z_order, int Z_max) {
    if (z_order < 0 || Z_max < z_order)
        throw ConfigError("baker_akhiezer needs Z_max >= z_order >= 0 (got Z_max = " +
                          std::to_string(Z_max) + ", z_order = " + std::to_string(z_order) + ")");
}

} // namespace

BakerFunction baker_akhiezer(const TauTable& T, bool adjoint, int z_order, int Z_max,
                             int copy) {
    validate(T, z_order, Z_max);
    const int N = T.N;
    const int ztop = T.D * T.K_t;  // past this order every retained degree is served
    BakerFunction out{{N, {}}, adjoint, z_order, Z_max, T.D, copy};
    for (int p = T.p_lo; p <= T.p_hi; ++p) {
        TimePolynomial inv = tau_inverse(T, p);
        if (copy != 0) inv = inv.relabel_copy(copy);
        LaurentMatrix M(N, Symbol::z);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                TimePolynomial tab = T.at(p, a, b);
                if (copy != 0) tab = tab.relabel_copy(copy);
                LaurentPolynomial sh = adjoint
                    ? miwa_shift(tab, copy, a, +1, Symbol::z, Z_max, T.K_t)
                    : miwa_shift(tab, copy, b, -1, Symbol::z, Z_max, T.K_t);
                int comp = adjoint ? a : b;
                LaurentPolynomial E = xi_exponential(copy, comp, adjoint ? -1 : +1,
                                                     T.K_t, ztop, T.caps);
                int pref = (adjoint ? -p : p) + (a == b ? 1 : 0) - 1;
                int s = adjoint ? sign_eps(b, a, p) : sign_eps(a, b, p);
                M.at(a, b) = ((inv * sh) * E).scaled(Rational(s)).shifted(pref);
            }
        out.family.sectors.emplace(p, std::move(M));
    }
    return out;
}

BakerFunction baker_akhiezer_series(const TauTable& T, bool adjoint, int z_order, int Z_max) {
    validate(T, z_order, Z_max);
    const int N = T.N;
    const int ztop = T.D * T.K_t;
    BakerFunction out{{N, {}}, adjoint, z_order, Z_max, T.D, 0};
    for (int p = T.p_lo; p <= T.p_hi; ++p) {
        LaurentMatrix M(N, Symbol::z);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                LaurentPolynomial acc(Symbol::z, -z_order, 0);
                for (int k = 0; k <= z_order; ++k) {
                    TimePolynomial c = (a == b && k == 0)
                        ? TimePolynomial::constant(Rational(1), T.caps)
                        : (adjoint ? wave_v_entry(T, p, a, b, k)
                                   : wave_w_entry(T, p, a, b, k));
                    acc.add_term(-k, c);
                }
                int comp = adjoint ? a : b;
                LaurentPolynomial E = xi_exponential(0, comp, adjoint ? -1 : +1,
                                                     T.K_t, ztop, T.caps);
                M.at(a, b) = (acc * E).shifted(adjoint ? -p : p);
            }
        out.family.sectors.emplace(p, std::move(M));
    }
    return out;
}

} // namespace mmkp
