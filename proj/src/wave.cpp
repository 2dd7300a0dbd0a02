#include "mmkp/wave.hpp"

namespace mmkp {

TimePolynomial tau_inverse(const TauTable& T, int p) {
    const TimePolynomial& t = T.at(p);
    if (t.constant_term() == 0)
        throw ConfigError("non-normalizable tau at p = " + std::to_string(p) +
                          " (zero constant term)");
    return t.series_inverse();
}

namespace {

TimePolynomial entry(const TauTable& T, int p, int a, int b, int k, int sign,
                     const TimePolynomial& inv) {
    if (k < 0) throw ConfigError("negative wave-coefficient order");
    // sign -1 selects w (h_k(-dtilde_b), eps_ab), +1 selects v (h_k(+dtilde_a), eps_ba)
    int comp = sign < 0 ? b : a;
    if (a == b)
        return schur_derivative_action(k, 0, comp, T.at(p), sign, T.K_t) * inv;
    if (k == 0) return TimePolynomial{};
    TimePolynomial num = schur_derivative_action(k - 1, 0, comp, T.at(p, a, b), sign, T.K_t);
    int eps = sign < 0 ? sign_eps(a, b, p) : sign_eps(b, a, p);
    return (num * inv).scaled(eps);
}

} // namespace

TimePolynomial wave_w_entry(const TauTable& T, int p, int a, int b, int k) {
    return entry(T, p, a, b, k, -1, tau_inverse(T, p));
}

TimePolynomial wave_v_entry(const TauTable& T, int p, int a, int b, int k) {
    return entry(T, p, a, b, k, +1, tau_inverse(T, p));
}

MatrixSeries wave_w_matrix(const TauTable& T, int p, int k) {
    TimePolynomial inv = tau_inverse(T, p);
    MatrixSeries M(T.N);
    for (int a = 1; a <= T.N; ++a)
        for (int b = 1; b <= T.N; ++b) M.at(a, b) = entry(T, p, a, b, k, -1, inv);
    return M;
}

MatrixSeries wave_v_matrix(const TauTable& T, int p, int k) {
    TimePolynomial inv = tau_inverse(T, p);
    MatrixSeries M(T.N);
    for (int a = 1; a <= T.N; ++a)
        for (int b = 1; b <= T.N; ++b) M.at(a, b) = entry(T, p, a, b, k, +1, inv);
    return M;
}

WaveCoefficients wave_coefficients(const TauTable& T, int k_max) {
    WaveCoefficients out;
    out.N = T.N;
    out.k_max = k_max;
    for (int p = T.p_lo; p <= T.p_hi; ++p) {
        TimePolynomial inv = tau_inverse(T, p);
        std::vector<MatrixSeries> ws, vs;
        for (int k = 0; k <= k_max; ++k) {
            MatrixSeries Mw(T.N), Mv(T.N);
            for (int a = 1; a <= T.N; ++a)
                for (int b = 1; b <= T.N; ++b) {
                    Mw.at(a, b) = entry(T, p, a, b, k, -1, inv);
                    Mv.at(a, b) = entry(T, p, a, b, k, +1, inv);
                }
            ws.push_back(Mw);
            vs.push_back(Mv);
        }
        out.w.emplace(p, std::move(ws));
        out.v.emplace(p, std::move(vs));
    }
    return out;
}

bool first_coefficient_antisymmetry_check(const TauTable& T) {
    for (int p = T.p_lo; p <= T.p_hi; ++p)
        if (!(wave_w_matrix(T, p, 1) + wave_v_matrix(T, p, 1)).is_zero()) return false;
    return true;
}

WaveOperators build_wave_operator(const TauTable& T, int K_trunc) {
    WaveOperators out;
    PseudoDiffOp W;
    W.N = T.N;
    for (int k = 0; k <= K_trunc; ++k)
        for (int p = T.p_lo; p <= T.p_hi; ++p)
            W.terms[k][p] = k == 0 ? MatrixSeries::identity(T.N, T.caps) : wave_w_matrix(T, p, k);
    out.W = prune_zero_shifts(W);

    // stored coefficient at shift k is v^{(k)}(p - k + 1): the shift in
    // e^{-k dp} v^{(k)}(p+1) is commuted to the right before storing
    PseudoDiffOp Wi;
    Wi.N = T.N;
    for (int k = 0; k <= K_trunc; ++k)
        for (int p = T.p_lo; p <= T.p_hi; ++p) {
            int q = p - k + 1;
            if (!T.has(q)) continue;
            Wi.terms[k][p] = k == 0 ? MatrixSeries::identity(T.N, T.caps) : wave_v_matrix(T, q, k);
        }
    out.W_inv_paper = prune_zero_shifts(Wi);
    out.W_inv_generic = pdo_invert(out.W, K_trunc);
    return out;
}

} // namespace mmkp
