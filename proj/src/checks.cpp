#include "mmkp/checks.hpp"

#include "mmkp/sign_table.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace mmkp {

namespace {

void need_sector(const TauTable& T, int p, const char* what) {
    if (!T.has(p))
        throw ConfigError(std::string(what) + " needs charge sector p = " + std::to_string(p) +
                          " inside the table range [" + std::to_string(T.p_lo) + ", " +
                          std::to_string(T.p_hi) + "]");
}

void need_component(const TauTable& T, int alpha) {
    if (alpha < 1 || alpha > T.N)
        throw ConfigError("component index " + std::to_string(alpha) + " outside 1.." +
                          std::to_string(T.N));
}

// table-intrinsic Miwa depth: shifts terminate past the deepest weighted degree
int intrinsic_depth(const TauTable& T) {
    return T.miwa_depth();
}

// d_{t_{alpha m}}; alpha = 0 is the matrix time, the sum over components
LaurentMatrix flow_derivative(const LaurentMatrix& M, int alpha, int m, int N) {
    if (alpha != 0) return M.time_derivative(0, alpha, m);
    LaurentMatrix out = M.time_derivative(0, 1, m);
    for (int b = 2; b <= N; ++b) out = out + M.time_derivative(0, b, m);
    return out;
}

MatrixSeries flow_derivative(const MatrixSeries& M, int alpha, int m, int N) {
    if (alpha != 0) return M.derivative(0, alpha, m);
    MatrixSeries out = M.derivative(0, 1, m);
    for (int b = 2; b <= N; ++b) out = out + M.derivative(0, b, m);
    return out;
}

// Classifies shift key k of the computed product P = A B: stored, structural
// zero (no split k1 + k2 = k over the factors' keys), or unknown (splits
// existed but erosion emptied every sector).
struct ProductKey {
    const std::map<int, MatrixSeries>* sectors = nullptr;
    bool unknown = false;
};
ProductKey product_key(const PseudoDiffOp& P, const PseudoDiffOp& A,
                       const PseudoDiffOp& B, int k) {
    auto it = P.terms.find(k);
    if (it != P.terms.end()) return {&it->second, false};
    for (const auto& [k1, tab] : A.terms)
        if (B.terms.count(k - k1)) return {nullptr, true};
    return {nullptr, false};
}

// Operators reused as complete shift families (applied to wave symbols or
// recomposed) must not have lost a key to erosion; only structural zeros may
// be absent.
void require_complete(const PseudoDiffOp& P, const PseudoDiffOp& A,
                      const PseudoDiffOp& B, int K_trunc, const char* what) {
    for (int k = A.min_shift() + B.min_shift(); k <= K_trunc; ++k)
        if (product_key(P, A, B, k).unknown)
            throw ConfigError(std::string(what) + ": charge range too narrow (shift " +
                              std::to_string(k) + " lost to sector erosion)");
}

PseudoDiffOp flow_derivative(const PseudoDiffOp& A, int alpha, int m) {
    if (alpha != 0) return pdo_time_derivative(A, 0, alpha, m);
    PseudoDiffOp out = pdo_time_derivative(A, 0, 1, m);
    for (int b = 2; b <= A.N; ++b)
        out = pdo_add(out, pdo_time_derivative(A, 0, b, m));
    return out;
}

struct SectorHull {
    int lo = INT_MAX;
    int hi = INT_MIN;
    Caps caps;
};

SectorHull sector_hull(const PseudoDiffOp& A) {
    SectorHull h;
    for (auto& [k, tab] : A.terms)
        for (auto& [p, M] : tab) {
            h.lo = std::min(h.lo, p);
            h.hi = std::max(h.hi, p);
            h.caps = M.at(1, 1).caps();
        }
    if (h.lo > h.hi) throw ConfigError("empty wave operator");
    return h;
}

} // namespace

TimePolynomial check_bilinear_identity(const TauTable& T, int n, int alpha, int beta,
                                       int p, int Z_max, Corruption corruption) {
    if (n < 0) throw ConfigError("bilinear identity holds for n >= 0 only");
    need_component(T, alpha);
    need_component(T, beta);
    need_sector(T, p, "bilinear identity");
    need_sector(T, p - n, "bilinear identity");
    TimePolynomial total(T.caps);
    for (int g = 1; g <= T.N; ++g) {
        LaurentPolynomial A = miwa_shift(T.at(p, alpha, g), 0, g, -1, Symbol::z, Z_max, T.K_t);
        LaurentPolynomial B = miwa_shift(T.at(p - n, g, beta).relabel_copy(1), 1, g, +1,
                                         Symbol::z, Z_max, T.K_t);
        int pref = n + (alpha == g ? 1 : 0) + (beta == g ? 1 : 0) - 2;
        int zneed = std::max(2 * Z_max + 1 - pref, 0);
        LaurentPolynomial E = xi_exponential_diff(0, 1, g, T.K_t, zneed, T.caps);
        if (corruption == Corruption::bump_schur && g == 1)
            E.add_term(1, TimePolynomial::constant(Rational(1), T.caps));
        TimePolynomial r = residue(((E * A) * B).shifted(pref));
        int e1 = sign_eps(alpha, g, p);
        int e2 = sign_eps(beta, g, p - n);
        if (corruption == Corruption::flip_eps && g == 1) e1 = -e1;
        total = total + r.scaled(Rational(e1 * e2));
    }
    return total;
}

const char* hirota_name(HirotaId id) {
    switch (id) {
        case HirotaId::H8: return "H8";
        case HirotaId::H9: return "H9";
        case HirotaId::H10: return "H10";
        case HirotaId::H11: return "H11";
    }
    return "?";
}

void BiLaurent::add(int e_mu, int e_nu, const TimePolynomial& q) {
    if (q.is_zero()) return;
    auto key = std::make_pair(e_mu, e_nu);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, q);
        return;
    }
    it->second = it->second + q;
    if (it->second.is_zero()) terms.erase(it);
}

long BiLaurent::monomials_within(int d_check, int order_bound) const {
    long nz = 0;
    for (auto& [key, q] : terms) {
        if (key.first < -order_bound || key.second < -order_bound) continue;
        nz += static_cast<long>(q.restricted(d_check).term_count());
    }
    return nz;
}

BiLaurent check_hirota(const TauTable& T, HirotaId which, const std::vector<int>& idx,
                       int p, int Z_max) {
    need_sector(T, p, "Hirota check");
    std::size_t want = which == HirotaId::H8 ? 3 : 2;
    if (idx.size() != want)
        throw ConfigError(std::string(hirota_name(which)) + " takes " + std::to_string(want) +
                          " component indices");
    for (int c : idx) need_component(T, c);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (idx[i] == idx[j])
                throw ConfigError(std::string(hirota_name(which)) +
                                  " requires distinct component indices");
    const TimePolynomial& tau = T.at(p);
    auto mshift = [&](const TimePolynomial& q, int comp, int sign) {
        return miwa_shift(q, 0, comp, sign, Symbol::z, Z_max, T.K_t);
    };
    BiLaurent res;
    if (which == HirotaId::H8) {
        int a = idx[0], b = idx[1], g = idx[2];
        LaurentPolynomial tab_sh = mshift(T.at(p, a, b), b, -1);
        LaurentPolynomial tgb_sh = mshift(T.at(p, g, b), b, -1);
        TimePolynomial dg_tau = tau.derivative(0, g, 1);
        // eps_{ab} is its own inverse, so the eps ratio is a triple product
        Rational coef(sign_eps(a, g, p) * sign_eps(g, b, p) * sign_eps(a, b, p));
        for (auto& [e, q] : tab_sh.coefficients()) {
            res.add(e, 0, q * dg_tau);
            res.add(e, 0, -(q.derivative(0, g, 1) * tau));
        }
        for (auto& [e, q] : tgb_sh.coefficients())
            res.add(e, 0, (T.at(p, a, g) * q).scaled(coef));
    } else if (which == HirotaId::H9 || which == HirotaId::H10) {
        int a = idx[0], b = idx[1];
        LaurentPolynomial tab_nu = mshift(T.at(p, a, b), b, -1);
        LaurentPolynomial tau_mu = mshift(tau, a, -1);
        int dc = which == HirotaId::H9 ? b : a;
        for (auto& [e1, q1] : tab_nu.coefficients())
            for (auto& [e2, q2] : tau_mu.coefficients()) {
                res.add(e2, e1, q1.derivative(0, dc, 1) * q2);
                res.add(e2, e1, -(q2.derivative(0, dc, 1) * q1));
            }
        if (which == HirotaId::H9) {
            for (auto& [e1, q1] : tab_nu.coefficients())
                for (auto& [e2, q2] : tau_mu.coefficients())
                    res.add(e2, e1 + 1, q1 * q2);
            for (auto& [em, q] : tau_mu.coefficients()) {
                LaurentPolynomial qsh = mshift(q, b, -1);
                for (auto& [en, q2] : qsh.coefficients())
                    res.add(em, en + 1, -(T.at(p, a, b) * q2));
            }
        } else {
            for (auto& [e1, q1] : tab_nu.coefficients())
                for (auto& [e2, q2] : tau_mu.coefficients())
                    res.add(e2 + 1, e1, -(q1 * q2));
            LaurentPolynomial tab_mu = mshift(T.at(p, a, b), a, -1);
            for (auto& [em, q] : tab_mu.coefficients()) {
                LaurentPolynomial qsh = mshift(q, b, -1);
                for (auto& [en, q2] : qsh.coefficients())
                    res.add(em + 1, en, tau * q2);
            }
        }
    } else {
        int a = idx[0], g = idx[1];
        LaurentPolynomial tau_mu = mshift(tau, a, -1);
        LaurentPolynomial tga_mu = mshift(T.at(p, g, a), a, -1);
        TimePolynomial d_tau = tau.derivative(0, g, 1);
        for (auto& [e, q] : tau_mu.coefficients()) {
            res.add(e, 0, q.derivative(0, g, 1) * tau);
            res.add(e, 0, -(d_tau * q));
        }
        for (auto& [e, q] : tga_mu.coefficients())
            res.add(e - 1, 0, T.at(p, a, g) * q);
    }
    return res;
}

FlowGenerator flow_generator(const WaveOperators& ops, int alpha, int m, int K_trunc) {
    if (m < 1) throw ConfigError("flow generator needs m >= 1");
    const int N = ops.W.N;
    if (alpha < 0 || alpha > N)
        throw ConfigError("flow component " + std::to_string(alpha) + " outside 0.." +
                          std::to_string(N));
    SectorHull h = sector_hull(ops.W);
    PseudoDiffOp Ea = alpha == 0 ? pdo_shift_op(m, N, h.lo, h.hi, h.caps)
                                 : pdo_unit_shift_op(alpha, m, N, h.lo, h.hi, h.caps);
    PseudoDiffOp M1 = pdo_mul(ops.W, Ea, K_trunc);
    require_complete(M1, ops.W, Ea, K_trunc, "flow generator");
    PseudoDiffOp G = pdo_mul(M1, ops.W_inv_paper, K_trunc);
    require_complete(G, M1, ops.W_inv_paper, K_trunc, "flow generator");
    return {pdo_project(G, ProjPart::plus), pdo_project(G, ProjPart::minus)};
}

PseudoDiffOp flow_generator(const TauTable& T, int alpha, int m, int K_trunc) {
    return flow_generator(build_wave_operator(T, K_trunc), alpha, m, K_trunc).plus;
}

PseudoDiffOp lax_operator(const WaveOperators& ops, int K_trunc) {
    SectorHull h = sector_hull(ops.W);
    // constant-coefficient shift over a window wide enough that only genuine
    // tau-sector erosion limits the product
    int margin = K_trunc + 4;
    PseudoDiffOp E1 = pdo_shift_op(1, ops.W.N, h.lo - margin, h.hi + margin, h.caps);
    PseudoDiffOp M1 = pdo_mul(ops.W, E1, K_trunc);
    require_complete(M1, ops.W, E1, K_trunc, "Lax operator");
    PseudoDiffOp L = pdo_mul(M1, ops.W_inv_paper, K_trunc);
    require_complete(L, M1, ops.W_inv_paper, K_trunc, "Lax operator");
    return L;
}

WaveSymbolFamily check_linear_problem_t1(const TauTable& T, bool adjoint) {
    if (T.p_lo == T.p_hi)
        throw ConfigError("t1 linear problem needs neighbouring charge sectors; "
                          "enlarge the p range");
    const int N = T.N;
    int depth = intrinsic_depth(T);
    BakerFunction B = baker_akhiezer(T, adjoint, depth, depth);
    WaveSymbolFamily out;
    out.N = N;
    int d_check = T.D - 1;
    if (!adjoint) {
        for (int p = T.p_lo; p < T.p_hi; ++p) {
            MatrixSeries dw = wave_w_matrix(T, p, 1) - wave_w_matrix(T, p + 1, 1);
            const LaurentMatrix& Psi = B.family.at(p);
            LaurentMatrix lhs = flow_derivative(Psi, 0, 1, N);
            LaurentMatrix rhs = B.family.at(p + 1) + dw * Psi;
            out.sectors.emplace(p, (lhs - rhs).restricted(d_check));
        }
    } else {
        for (int p = T.p_lo + 1; p <= T.p_hi; ++p) {
            MatrixSeries dw = wave_w_matrix(T, p - 1, 1) - wave_w_matrix(T, p, 1);
            const LaurentMatrix& Psi = B.family.at(p);
            LaurentMatrix lhs = flow_derivative(Psi, 0, 1, N).scaled(Rational(-1));
            LaurentMatrix rhs = B.family.at(p - 1) + Psi * dw;
            out.sectors.emplace(p, (lhs - rhs).restricted(d_check));
        }
    }
    return out;
}

FlowEquationResiduals check_flow_equations(const TauTable& T, int alpha, int m,
                                           int K_trunc) {
    if (alpha != 0) need_component(T, alpha);
    WaveOperators ops = build_wave_operator(T, K_trunc);
    FlowGenerator A = flow_generator(ops, alpha, m, K_trunc);
    int depth = intrinsic_depth(T);
    BakerFunction Psi = baker_akhiezer(T, false, depth, depth);
    FlowEquationResiduals out;
    out.flow.N = T.N;
    out.sato.N = T.N;

    WaveSymbolFamily APsi = pdo_apply(A.plus, Psi.family);
    for (auto& [p, av] : APsi.sectors) {
        LaurentMatrix dv = flow_derivative(Psi.family.at(p), alpha, m, T.N);
        out.flow.sectors.emplace(p, (dv - av).restricted(T.D - 1));
    }

    // - (A_- W): a shift key no split reaches is the zero family (A_- itself
    // may be structurally empty, e.g. for the identity element), a key or
    // sector lost to erosion is unknown
    bool have_minus = !A.minus.terms.empty();
    PseudoDiffOp rhs;
    if (have_minus) rhs = pdo_scale(pdo_mul(A.minus, ops.W, K_trunc), Rational(-1));
    for (auto& [k, tab] : ops.W.terms) {
        ProductKey pk;
        if (have_minus) {
            pk = product_key(rhs, A.minus, ops.W, k);
            if (pk.unknown) continue;
        }
        for (auto& [p, M] : tab) {
            MatrixSeries dM = flow_derivative(M, alpha, m, T.N);
            if (pk.sectors) {
                auto rp = pk.sectors->find(p);
                if (rp == pk.sectors->end()) continue;
                dM = dM - rp->second;
            }
            out.sato.terms[k].emplace(p, dM.restricted(T.D - 1));
        }
    }

    return out;
}

WaveSymbolFamily check_z_eigenvalue(const TauTable& T, int K_trunc) {
    WaveOperators ops = build_wave_operator(T, K_trunc);
    PseudoDiffOp L = lax_operator(ops, K_trunc);
    int depth = intrinsic_depth(T);
    BakerFunction Psi = baker_akhiezer(T, false, depth, depth);
    WaveSymbolFamily out;
    out.N = T.N;
    WaveSymbolFamily LPsi = pdo_apply(L, Psi.family);
    for (auto& [p, lv] : LPsi.sectors) {
        LaurentMatrix zv = Psi.family.at(p).shifted(1);
        out.sectors.emplace(p, (lv - zv).restricted(T.D));
    }
    return out;
}

PseudoDiffOp check_lax_equation(const TauTable& T, int alpha, int m, int K_trunc) {
    if (alpha != 0) need_component(T, alpha);
    WaveOperators ops = build_wave_operator(T, K_trunc);
    FlowGenerator A = flow_generator(ops, alpha, m, K_trunc);
    PseudoDiffOp L = lax_operator(ops, K_trunc);
    PseudoDiffOp AL = pdo_mul(A.plus, L, K_trunc);
    PseudoDiffOp LA = pdo_mul(L, A.plus, K_trunc);
    PseudoDiffOp out;
    out.N = T.N;
    // [A, L] at shift k draws on L at shift k + m, so the joint truncation
    // only supports shifts through K_trunc - m - 1. A product key with no
    // contributing split is the zero family; one whose sectors were all
    // eroded, or a sector missing inside a present key, is unknown.
    for (auto& [k, tab] : L.terms) {
        if (k > K_trunc - m - 1) continue;
        ProductKey al = product_key(AL, A.plus, L, k);
        ProductKey la = product_key(LA, L, A.plus, k);
        if (al.unknown || la.unknown) continue;
        for (auto& [p, M] : tab) {
            MatrixSeries res = flow_derivative(M, alpha, m, T.N);
            bool known = true;
            for (int sign = 0; sign < 2; ++sign) {
                const auto* side = sign ? la.sectors : al.sectors;
                if (!side) continue;
                auto it = side->find(p);
                if (it == side->end()) { known = false; break; }
                res = sign ? res + it->second : res - it->second;
            }
            if (known) out.terms[k].emplace(p, res.restricted(T.D - 1));
        }
    }
    return out;
}

PseudoDiffOp check_zero_curvature(const TauTable& T, int alpha1, int m1,
                                  int alpha2, int m2, int K_trunc) {
    if (alpha1 != 0) need_component(T, alpha1);
    if (alpha2 != 0) need_component(T, alpha2);
    WaveOperators ops = build_wave_operator(T, K_trunc);
    PseudoDiffOp A1 = flow_generator(ops, alpha1, m1, K_trunc).plus;
    PseudoDiffOp A2 = flow_generator(ops, alpha2, m2, K_trunc).plus;
    PseudoDiffOp P12 = pdo_mul(A1, A2, K_trunc);
    PseudoDiffOp P21 = pdo_mul(A2, A1, K_trunc);
    // same key/sector semantics as the Lax check; flow_generator guarantees
    // the projections lost no key to erosion, so absent A_i keys are zeros
    auto generator_key = [](const PseudoDiffOp& A, int k) {
        ProductKey r;
        auto it = A.terms.find(k);
        if (it != A.terms.end()) r.sectors = &it->second;
        return r;
    };
    std::set<int> keys;
    for (const auto* piece : {&A1, &A2, &P12, &P21})
        for (auto& [k, tab] : piece->terms)
            if (k <= K_trunc - 1) keys.insert(k);
    PseudoDiffOp out;
    out.N = T.N;
    for (int k : keys) {
        ProductKey pk[4] = {generator_key(A1, k), generator_key(A2, k),
                            product_key(P12, A1, A2, k), product_key(P21, A2, A1, k)};
        if (pk[0].unknown || pk[1].unknown || pk[2].unknown || pk[3].unknown) continue;
        std::set<int> sectors;
        bool first = true;
        for (const auto& piece : pk) {
            if (!piece.sectors) continue;
            std::set<int> here;
            for (auto& [p, M] : *piece.sectors)
                if (first || sectors.count(p)) here.insert(p);
            sectors = std::move(here);
            first = false;
        }
        for (int p : sectors) {
            std::vector<MatrixSeries> parts;
            if (pk[0].sectors)
                parts.push_back(
                    flow_derivative(pk[0].sectors->at(p), alpha2, m2, T.N));
            if (pk[1].sectors)
                parts.push_back(flow_derivative(pk[1].sectors->at(p), alpha1, m1, T.N)
                                    .scaled(Rational(-1)));
            if (pk[2].sectors) parts.push_back(pk[2].sectors->at(p));
            if (pk[3].sectors) parts.push_back(pk[3].sectors->at(p).scaled(Rational(-1)));
            MatrixSeries res = parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i) res = res + parts[i];
            out.terms[k].emplace(p, res.restricted(T.D - 1));
        }
    }
    return out;
}

MatrixSeries check_ba_bilinear_pairing(const TauTable& T, int p, int p_prime, int Z_max) {
    if (p < p_prime)
        throw ConfigError("BA pairing is claimed for p >= p' only (got p = " +
                          std::to_string(p) + ", p' = " + std::to_string(p_prime) + ")");
    need_sector(T, p, "BA pairing");
    need_sector(T, p_prime, "BA pairing");
    BakerFunction Psi = baker_akhiezer(T, false, Z_max, Z_max, 0);
    BakerFunction Psid = baker_akhiezer(T, true, Z_max, Z_max, 1);
    const LaurentMatrix& A = Psi.family.at(p);
    const LaurentMatrix& B = Psid.family.at(p_prime);
    MatrixSeries out(T.N);
    for (int a = 1; a <= T.N; ++a)
        for (int b = 1; b <= T.N; ++b) {
            TimePolynomial acc(T.caps);
            for (int c = 1; c <= T.N; ++c)
                acc = acc + residue(A.at(a, c) * B.at(c, b));
            out.at(a, b) = acc.restricted(T.D - 1, T.D - 1);
        }
    return out;
}

} // namespace mmkp
