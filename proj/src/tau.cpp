#include "mmkp/tau.hpp"

#include <algorithm>

namespace mmkp {

TimePolynomial tau(const ChargeVector& p, int alpha, int beta, const CliffordSpec& g,
                   const ModeWindow& w, int K_t, int D, Caps caps) {
    int N = p.components();
    g.validate(N, w);
    ChargeVector q = p;
    q.p[alpha - 1] += 1;
    q.p[beta - 1] -= 1;
    for (int a = 1; a <= N; ++a)
        if (q.at(a) < w.lo || q.at(a) > w.hi)
            throw ConfigError("tau dual charge outside window [" + std::to_string(w.lo) + "," +
                              std::to_string(w.hi) + ")");
    FockVector ket = vacuum(p, w, caps);
    ket = apply_clifford(g, ket);
    ket = apply_exp_J(K_t, D, ket);
    return dual_pairing(q, ket);
}

const TimePolynomial& TauTable::at(int p) const {
    auto it = diag.find(p);
    if (it == diag.end())
        throw ConfigError("tau table has no sector p = " + std::to_string(p));
    return it->second;
}

const TimePolynomial& TauTable::at(int p, int alpha, int beta) const {
    if (alpha == beta) return at(p);
    auto it = off.find({p, alpha, beta});
    if (it == off.end())
        throw ConfigError("tau table has no entry (" + std::to_string(p) + "," +
                          std::to_string(alpha) + "," + std::to_string(beta) + ")");
    return it->second;
}

int TauTable::miwa_depth() const {
    int d = 0;
    for (auto& [p, t] : diag)
        for (int a = 1; a <= N; ++a) d = std::max(d, t.weighted_degree(0, a));
    for (auto& [key, t] : off)
        for (int a = 1; a <= N; ++a) d = std::max(d, t.weighted_degree(0, a));
    return d;
}

int TauTable::max_plain_degree() const {
    int d = 0;
    for (auto& [p, t] : diag) d = std::max(d, t.plain_degree(0));
    for (auto& [key, t] : off) d = std::max(d, t.plain_degree(0));
    return d;
}

TauTable tau_table(int p_lo, int p_hi, const CliffordSpec& g, const ModeWindow& w,
                   int N, int K_t, int D, Caps caps) {
    validate_window(w);
    g.validate(N, w);
    if (p_lo > p_hi) throw ConfigError("empty tau table range");
    if (w.lo > p_lo - 1 || w.hi < p_hi + 1)
        throw ConfigError("mode window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                          ") too small for sectors " + std::to_string(p_lo) + ".." +
                          std::to_string(p_hi) + "; need lo <= " + std::to_string(p_lo - 1) +
                          " and hi >= " + std::to_string(p_hi + 1));
    TauTable T;
    T.N = N;
    T.p_lo = p_lo;
    T.p_hi = p_hi;
    T.D = D;
    T.K_t = K_t;
    T.window = w;
    T.caps = caps;
    T.g = g;
    for (int p = p_lo; p <= p_hi; ++p) {
        // the ket is shared by every (alpha, beta) entry of this sector
        FockVector ket = vacuum(ChargeVector::uniform(N, p), w, caps);
        ket = apply_clifford(g, ket);
        ket = apply_exp_J(K_t, D, ket);
        T.diag[p] = dual_pairing(ChargeVector::uniform(N, p), ket);
        for (int a = 1; a <= N; ++a) {
            for (int b = 1; b <= N; ++b) {
                if (a == b) continue;
                ChargeVector q = ChargeVector::uniform(N, p);
                q.p[a - 1] += 1;
                q.p[b - 1] -= 1;
                T.off[{p, a, b}] = dual_pairing(q, ket);
            }
        }
    }
    return T;
}

bool window_stability_check(const CliffordSpec& g, int D, const ModeWindow& w1,
                            const ModeWindow& w2, int N, int K_t, Caps caps) {
    validate_window(w1);
    validate_window(w2);
    if (w2.lo > w1.lo || w2.hi < w1.hi)
        throw ConfigError("stability check needs the second window to contain the first");
    int p_lo = w1.lo + 1, p_hi = w1.hi - 1;
    TauTable a = tau_table(p_lo, p_hi, g, w1, N, K_t, D, caps);
    TauTable b = tau_table(p_lo, p_hi, g, w2, N, K_t, D, caps);
    return a.diag == b.diag && a.off == b.off;
}

} // namespace mmkp
