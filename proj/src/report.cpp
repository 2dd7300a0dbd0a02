#include "mmkp/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace mmkp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    long monomials = 0;
    long compared = 0;
};

void add_check(Report& rep, const std::string& id, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Outcome o = body();
    rep.checks.push_back({id, o.pass, o.monomials, o.compared, ms_since(t0)});
}

bool suite_selected(const Scenario& sc, const char* id) {
    for (const auto& s : sc.suite)
        if (s == "all" || s == id) return true;
    return false;
}

long family_monomials(const WaveSymbolFamily& F) {
    long n = 0;
    for (const auto& [p, M] : F.sectors) n += M.monomial_count();
    return n;
}

bool family_zero(const WaveSymbolFamily& F) {
    for (const auto& [p, M] : F.sectors)
        if (!M.is_zero()) return false;
    return true;
}

long pdo_entries(const PseudoDiffOp& A) {
    long n = 0;
    for (const auto& [k, row] : A.terms) n += static_cast<long>(row.size());
    return n;
}

std::string check_id(const char* suite, std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    os << suite;
    for (const auto& [key, val] : kv) os << ' ' << key << '=' << val;
    return os.str();
}

void run_bilinear(Report& rep, const TauTable& T, const Scenario& sc, Corruption corr) {
    for (int p = sc.p_lo; p <= sc.p_hi; ++p)
        for (int n = 0; n <= 2 && p - n >= sc.p_lo; ++n)
            for (int a = 1; a <= sc.N; ++a)
                for (int b = 1; b <= sc.N; ++b)
                    add_check(rep,
                              check_id("bilinear",
                                       {{"n", n}, {"alpha", a}, {"beta", b}, {"p", p}}),
                              [&, n, a, b, p] {
                                  TimePolynomial r =
                                      check_bilinear_identity(T, n, a, b, p, sc.Z_max, corr);
                                  return Outcome{r.is_zero(),
                                                 static_cast<long>(r.term_count()), 1};
                              });
}

void run_hirota(Report& rep, const TauTable& T, const Scenario& sc) {
    auto one = [&](HirotaId which, std::vector<int> idx, int p) {
        std::ostringstream os;
        os << "hirota " << hirota_name(which) << " p=" << p << " idx=";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        add_check(rep, os.str(), [&, which, idx, p] {
            BiLaurent r = check_hirota(T, which, idx, p, sc.Z_max);
            long bad = r.monomials_within(sc.D - 1, sc.Z_max - 1);
            return Outcome{bad == 0, bad, static_cast<long>(r.terms.size())};
        });
    };
    for (int p = sc.p_lo; p <= sc.p_hi; ++p) {
        if (sc.N >= 3)
            for (int a = 1; a <= sc.N; ++a)
                for (int b = 1; b <= sc.N; ++b)
                    for (int c = 1; c <= sc.N; ++c)
                        if (a != b && b != c && a != c) one(HirotaId::H8, {a, b, c}, p);
        for (int a = 1; a <= sc.N; ++a)
            for (int b = 1; b <= sc.N; ++b)
                if (a != b) {
                    one(HirotaId::H9, {a, b}, p);
                    one(HirotaId::H10, {a, b}, p);
                    one(HirotaId::H11, {a, b}, p);
                }
    }
}

void run_wave(Report& rep, const TauTable& T, const Scenario& sc) {
    add_check(rep, "wave identity-product", [&] {
        WaveOperators ops = build_wave_operator(T, sc.K_trunc);
        PseudoDiffOp prod = pdo_mul(ops.W, ops.W_inv_paper, sc.K_trunc);
        MatrixSeries I = MatrixSeries::identity(sc.N, sc.caps());
        Outcome o{true, 0, 0};
        for (const auto& [k, row] : prod.terms)
            for (const auto& [p, M] : row) {
                ++o.compared;
                MatrixSeries res = (k == 0 ? M - I : M).restricted(sc.D);
                o.monomials += res.monomial_count();
            }
        o.pass = o.monomials == 0 && o.compared > 0;
        return o;
    });
    add_check(rep, "wave inverse-agreement", [&] {
        WaveOperators ops = build_wave_operator(T, sc.K_trunc);
        AgreementReport ar = pdo_common_agreement(ops.W_inv_paper, ops.W_inv_generic);
        return Outcome{ar.agree && ar.compared > 0, 0, ar.compared};
    });
    add_check(rep, "wave antisymmetry", [&] {
        bool ok = first_coefficient_antisymmetry_check(T);
        return Outcome{ok, 0, sc.p_hi - sc.p_lo + 1};
    });
}

void run_t1(Report& rep, const TauTable& T, const Scenario& sc) {
    if (sc.p_lo >= sc.p_hi) return;  // the derivative check needs a neighbor sector
    for (bool adjoint : {false, true})
        add_check(rep, adjoint ? "t1 adjoint" : "t1 direct", [&, adjoint] {
            WaveSymbolFamily r = check_linear_problem_t1(T, adjoint);
            return Outcome{family_zero(r), family_monomials(r),
                           static_cast<long>(r.sectors.size())};
        });
}

void run_flows(Report& rep, const TauTable& T, const Scenario& sc) {
    // sector erosion of W E e^{m dp} W^{-1} plus the strict all-shifts rule of
    // pdo_apply leaves valid sectors only when the charge range has at least
    // 2m + 2 rows; assembling the generator itself without losing a shift to
    // erosion needs m + K_trunc + 1
    int rows = sc.p_hi - sc.p_lo + 1;
    std::vector<int> orders;
    for (int m : {1, 2}) {
        if (m > 1 && sc.K_trunc < 2) continue;
        if (rows >= std::max(2 * m + 2, m + sc.K_trunc + 1)) orders.push_back(m);
    }
    for (int alpha = 0; alpha <= sc.N; ++alpha)
        for (int m : orders) {
            add_check(rep, check_id("flows", {{"alpha", alpha}, {"m", m}}) + " flow",
                      [&, alpha, m] {
                          auto fr = check_flow_equations(T, alpha, m, sc.K_trunc);
                          return Outcome{family_zero(fr.flow), family_monomials(fr.flow),
                                         static_cast<long>(fr.flow.sectors.size())};
                      });
            add_check(rep, check_id("flows", {{"alpha", alpha}, {"m", m}}) + " sato",
                      [&, alpha, m] {
                          auto fr = check_flow_equations(T, alpha, m, sc.K_trunc);
                          return Outcome{fr.sato.monomial_count() == 0 &&
                                             !fr.sato.terms.empty(),
                                         fr.sato.monomial_count(), pdo_entries(fr.sato)};
                      });
        }
}

void run_lax(Report& rep, const TauTable& T, const Scenario& sc) {
    int rows = sc.p_hi - sc.p_lo + 1;
    std::vector<int> orders;
    for (int m : {1, 2}) {
        if (m > 1 && sc.K_trunc < 3) continue;
        if (rows >= m + sc.K_trunc + 1) orders.push_back(m);  // generator feasibility
    }
    for (int alpha = 0; alpha <= sc.N; ++alpha)
        for (int m : orders)
            add_check(rep, check_id("lax", {{"alpha", alpha}, {"m", m}}), [&, alpha, m] {
                PseudoDiffOp r = check_lax_equation(T, alpha, m, sc.K_trunc);
                long entries = pdo_entries(r);
                return Outcome{r.monomial_count() == 0 && entries > 0,
                               r.monomial_count(), entries};
            });
    // L has shifts -1..K_trunc; applying it needs Psi at p - K_trunc and the
    // top sectors of L, which coexist only with K_trunc + 3 rows
    if (rows >= sc.K_trunc + 3)
        add_check(rep, "lax eigen", [&] {
            WaveSymbolFamily r = check_z_eigenvalue(T, sc.K_trunc);
            return Outcome{family_zero(r), family_monomials(r),
                           static_cast<long>(r.sectors.size())};
        });
}

void run_zero_curvature(Report& rep, const TauTable& T, const Scenario& sc) {
    auto one = [&](int a1, int m1, int a2, int m2) {
        std::ostringstream os;
        os << "zero-curvature (" << a1 << "," << m1 << ")x(" << a2 << "," << m2 << ")";
        add_check(rep, os.str(), [&, a1, m1, a2, m2] {
            PseudoDiffOp r = check_zero_curvature(T, a1, m1, a2, m2, sc.K_trunc);
            long entries = pdo_entries(r);
            return Outcome{r.monomial_count() == 0 && entries > 0, r.monomial_count(),
                           entries};
        });
    };
    int rows = sc.p_hi - sc.p_lo + 1;
    if (rows >= sc.K_trunc + 2)
        for (int a = 1; a <= sc.N; ++a)
            for (int b = a + 1; b <= sc.N; ++b) one(a, 1, b, 1);
    if (sc.K_trunc >= 2 && rows >= sc.K_trunc + 3) one(0, 1, 0, 2);
}

void run_pairing(Report& rep, const TauTable& T, const Scenario& sc) {
    for (int p = sc.p_lo; p <= sc.p_hi; ++p)
        for (int q = sc.p_lo; q <= sc.p_hi; ++q) {
            if (p - q < 0 || p - q > 2) continue;
            std::ostringstream os;
            os << "pairing p=" << p << " p'=" << q;
            add_check(rep, os.str(), [&, p, q] {
                MatrixSeries r = check_ba_bilinear_pairing(T, p, q, sc.Z_max);
                return Outcome{r.is_zero(), r.monomial_count(),
                               static_cast<long>(sc.N) * sc.N};
            });
        }
}

} // namespace

Report run_scenario(const Scenario& sc, const std::string& negative_control) {
    auto t0 = Clock::now();
    sc.validate();

    Corruption corr = Corruption::none;
    if (negative_control == "flip-eps")
        corr = Corruption::flip_eps;
    else if (negative_control == "bump-schur")
        corr = Corruption::bump_schur;
    else if (!negative_control.empty())
        throw ConfigError("unknown negative control '" + negative_control +
                          "' (expected flip-eps or bump-schur)");

    Report rep;
    rep.scenario = sc;
    rep.negative_control = negative_control;

    CliffordSpec g = sc.clifford();
    rep.clifford_text = g.serialize();

    int budget = std::min({sc.D, sc.K_t, sc.Z_max});
    if (g.energy() > budget) {
        std::ostringstream os;
        os << "scenario " << sc.name << ": Clifford energy " << g.energy()
           << " exceeds the exactness budget min(D, K_t, Z_max) = " << budget
           << "; raise the truncation orders to at least " << g.energy();
        throw ConfigError(os.str());
    }

    ModeWindow wide{sc.window.lo - 1, sc.window.hi + 1};
    rep.window_stable =
        window_stability_check(g, sc.D, sc.window, wide, sc.N, sc.K_t, sc.caps());
    if (!rep.window_stable) {
        rep.total_ms = ms_since(t0);
        return rep;
    }

    TauTable T = tau_table(sc.p_lo, sc.p_hi, g, sc.window, sc.N, sc.K_t, sc.D, sc.caps());
    {
        std::ostringstream os;
        for (int p = sc.p_lo; p <= sc.p_hi; ++p)
            os << "p=" << p << ": " << T.at(p).to_string() << "\n";
        rep.tau_text = os.str();
    }

    if (corr != Corruption::none) {
        // a corrupted run probes only the identity the corruption targets
        run_bilinear(rep, T, sc, corr);
    } else {
        if (suite_selected(sc, "bilinear")) run_bilinear(rep, T, sc, Corruption::none);
        if (suite_selected(sc, "hirota")) run_hirota(rep, T, sc);
        if (suite_selected(sc, "wave")) run_wave(rep, T, sc);
        if (suite_selected(sc, "t1")) run_t1(rep, T, sc);
        if (suite_selected(sc, "flows")) run_flows(rep, T, sc);
        if (suite_selected(sc, "lax")) run_lax(rep, T, sc);
        if (suite_selected(sc, "zero-curvature")) run_zero_curvature(rep, T, sc);
        if (suite_selected(sc, "pairing")) run_pairing(rep, T, sc);
    }

    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckVerdict& a, const CheckVerdict& b) { return a.id < b.id; });
    rep.total_ms = ms_since(t0);
    return rep;
}

bool Report::pass() const {
    if (!window_stable) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::human() const {
    std::ostringstream os;
    os << "scenario " << scenario.name << "  (N=" << scenario.N << ", window ["
       << scenario.window.lo << ", " << scenario.window.hi << "), p " << scenario.p_lo
       << ".." << scenario.p_hi << ", D=" << scenario.D << ", K_t=" << scenario.K_t
       << ", Z_max=" << scenario.Z_max << ", K_trunc=" << scenario.K_trunc << ")\n";
    if (clifford_text.empty()) {
        os << "clifford: identity\n";
    } else {
        os << "clifford:\n";
        std::istringstream lines(clifford_text);
        for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    }
    if (!tau_text.empty()) {
        os << "tau (diagonal):\n";
        std::istringstream lines(tau_text);
        for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    }
    if (!negative_control.empty()) os << "negative control: " << negative_control << "\n";
    os << "window stability [" << scenario.window.lo << ", " << scenario.window.hi
       << ") -> [" << scenario.window.lo - 1 << ", " << scenario.window.hi + 1
       << "): " << (window_stable ? "stable" : "UNSTABLE") << "\n";
    long failed = 0;
    os.setf(std::ios::fixed);
    os.precision(1);
    for (const auto& c : checks) {
        if (!c.pass) ++failed;
        os << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.id << "  ("
           << c.residual_monomials << " residual monomials, " << c.compared
           << " compared, " << c.elapsed_ms << " ms)\n";
    }
    if (pass())
        os << "result: PASS (" << checks.size() << " checks, " << total_ms << " ms)\n";
    else if (!window_stable)
        os << "result: UNSTABLE (truncation window not converged)\n";
    else
        os << "result: FAIL (" << failed << " of " << checks.size() << " checks, "
           << total_ms << " ms)\n";
    return os.str();
}

std::string Report::json_text() const {
    nlohmann::ordered_json j;
    j["scenario"] = {
        {"name", scenario.name},
        {"N", scenario.N},
        {"window", {scenario.window.lo, scenario.window.hi}},
        {"p_range", {scenario.p_lo, scenario.p_hi}},
        {"D", scenario.D},
        {"K_t", scenario.K_t},
        {"Z_max", scenario.Z_max},
        {"K_trunc", scenario.K_trunc},
        {"seed", scenario.seed},
        {"suite", scenario.suite},
    };
    j["clifford"] = clifford_text;
    j["tau"] = tau_text;
    j["negative_control"] = negative_control;
    j["window_stable"] = window_stable;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        arr.push_back({{"id", c.id},
                       {"pass", c.pass},
                       {"residual_monomials", c.residual_monomials},
                       {"compared", c.compared},
                       {"elapsed_ms", c.elapsed_ms}});
    j["checks"] = arr;
    j["pass"] = pass();
    j["total_ms"] = total_ms;
    return j.dump(2) + "\n";
}

} // namespace mmkp
