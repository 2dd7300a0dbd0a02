#include "mmkp/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace mmkp {

using nlohmann::json;

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> ids = {
        "bilinear", "hirota", "wave", "t1", "flows", "lax", "zero-curvature", "pairing",
    };
    return ids;
}

void Scenario::validate() const {
    if (N < 1) throw ConfigError("scenario " + name + ": N must be >= 1");
    validate_window(window);
    if (p_lo > p_hi)
        throw ConfigError("scenario " + name + ": empty charge range (p_lo > p_hi)");
    if (window.lo > p_lo - 1 || window.hi < p_hi + 1) {
        std::ostringstream os;
        os << "scenario " << name << ": window [" << window.lo << ", " << window.hi
           << ") cannot host charges " << p_lo << ".." << p_hi
           << "; need lo <= " << (p_lo - 1) << " and hi >= " << (p_hi + 1);
        throw ConfigError(os.str());
    }
    if (D < 1 || K_t < 1 || Z_max < 1 || K_trunc < 1)
        throw ConfigError("scenario " + name + ": D, K_t, Z_max, K_trunc must all be >= 1");
    if (Z_max > K_t)
        throw ConfigError("scenario " + name +
                          ": Z_max must not exceed K_t (Miwa shifts draw on t_1..t_Z_max)");
    // the stability gate re-runs on the window widened by one slot per side
    long slots = static_cast<long>(N) * (window.size() + 2);
    if (slots > 64) {
        std::ostringstream os;
        os << "scenario " << name << ": N * (window size + 2) = " << slots
           << " exceeds the 64-slot occupation word";
        throw ConfigError(os.str());
    }
    const auto& ids = known_suites();
    for (const auto& s : suite) {
        if (s == "all") continue;
        if (std::find(ids.begin(), ids.end(), s) == ids.end())
            throw ConfigError("scenario " + name + ": unknown suite id '" + s + "'");
    }
    if (suite.empty())
        throw ConfigError("scenario " + name + ": empty suite list");
    if (source == CliffordSource::random && random_count < 0)
        throw ConfigError("scenario " + name + ": random factor count must be >= 0");
    if (source == CliffordSource::file && clifford_file.empty())
        throw ConfigError("scenario " + name + ": no clifford file given");
}

CliffordSpec Scenario::clifford() const {
    CliffordSpec g;
    switch (source) {
    case CliffordSource::inline_factors: g = factors; break;
    case CliffordSource::file: g = CliffordSpec::parse_file(clifford_file); break;
    case CliffordSource::random: g = generate_random_clifford(N, window, random_count, seed); break;
    }
    g.validate(N, window);
    return g;
}

CliffordSpec generate_random_clifford(int N, const ModeWindow& w, int count,
                                      std::uint64_t seed) {
    if (count < 0) throw ConfigError("random clifford: factor count must be >= 0");
    validate_window(w);
    std::mt19937_64 rng(seed);
    // modulo draw instead of uniform_int_distribution: the distribution's
    // output sequence is implementation-defined, and reports must be
    // reproducible from the seed alone
    auto draw = [&rng](int lo, int hi) {  // [lo, hi)
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo));
    };
    static const Rational pool[] = {
        Rational(1),     Rational(-1), Rational(1, 2), Rational(-1, 2),
        Rational(2),     Rational(-2), Rational(1, 3), Rational(-1, 3),
    };
    CliffordSpec g;
    int tries = 0;
    while (static_cast<int>(g.factors.size()) < count) {
        if (++tries > 1000)
            throw ConfigError("random clifford: window too small to place factors");
        int alpha = draw(1, N + 1);
        int beta = draw(1, N + 1);
        int i = draw(w.lo, w.hi);
        int j = draw(w.lo, w.hi);
        if (alpha == beta && i == j) continue;  // factor would not be nilpotent
        g.factors.push_back({alpha, i, beta, j, pool[draw(0, 8)]});
    }
    return g;
}

namespace {

Rational json_rational(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ConfigError("scenario: coefficients must be integers or \"num/den\" strings");
}

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    if (pos == std::string::npos) return ".";
    if (pos == 0) return "/";
    return path.substr(0, pos);
}

} // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    try {
        auto need = [&j](const char* key) -> const json& {
            if (!j.contains(key))
                throw ConfigError(std::string("scenario: missing field '") + key + "'");
            return j.at(key);
        };
        Scenario sc;
        sc.name = j.value("name", std::string("unnamed"));
        sc.N = need("N").get<int>();
        const json& w = need("window");
        if (!w.is_array() || w.size() != 2)
            throw ConfigError("scenario: window must be [lo, hi)");
        sc.window = ModeWindow{w.at(0).get<int>(), w.at(1).get<int>()};
        const json& pr = need("p_range");
        if (!pr.is_array() || pr.size() != 2)
            throw ConfigError("scenario: p_range must be [p_lo, p_hi]");
        sc.p_lo = pr.at(0).get<int>();
        sc.p_hi = pr.at(1).get<int>();
        sc.D = j.value("D", 3);
        sc.K_t = j.value("K_t", 3);
        sc.Z_max = j.value("Z_max", 3);
        sc.K_trunc = j.value("K_trunc", 3);
        sc.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("suite")) sc.suite = j.at("suite").get<std::vector<std::string>>();
        const json& c = need("clifford");
        if (c.contains("factors")) {
            sc.source = CliffordSource::inline_factors;
            for (const auto& f : c.at("factors")) {
                if (!f.is_array() || f.size() != 5)
                    throw ConfigError(
                        "scenario: each factor must be [alpha, i, beta, j, coeff]");
                sc.factors.factors.push_back({f.at(0).get<int>(), f.at(1).get<int>(),
                                              f.at(2).get<int>(), f.at(3).get<int>(),
                                              json_rational(f.at(4))});
            }
        } else if (c.contains("file")) {
            sc.source = CliffordSource::file;
            std::string rel = c.at("file").get<std::string>();
            sc.clifford_file = (!rel.empty() && rel.front() == '/') ? rel
                                                                    : base_dir + "/" + rel;
        } else if (c.contains("random_count")) {
            sc.source = CliffordSource::random;
            sc.random_count = c.at("random_count").get<int>();
        } else {
            throw ConfigError("scenario: clifford needs 'factors', 'file' or 'random_count'");
        }
        return sc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), dir_of(path));
}

} // namespace mmkp
