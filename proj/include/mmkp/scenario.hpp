#pragma once

#include "mmkp/checks.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mmkp {

// Which concrete Clifford element a scenario uses: explicit factors, a factor
// file, or seeded random generation.
enum class CliffordSource { inline_factors, file, random };

struct Scenario {
    std::string name = "unnamed";
    int N = 3;
    ModeWindow window{-3, 3};
    int p_lo = -1;
    int p_hi = 1;
    int D = 3;
    int K_t = 3;
    int Z_max = 3;
    int K_trunc = 3;
    std::vector<std::string> suite{"all"};
    std::uint64_t seed = 0;

    CliffordSource source = CliffordSource::inline_factors;
    CliffordSpec factors;       // inline_factors
    std::string clifford_file;  // file (resolved against the scenario's directory)
    int random_count = 0;       // random

    // invariants checked before any engine work; throws ConfigError
    void validate() const;
    // the concrete element (generates/loads according to source)
    CliffordSpec clifford() const;
    Caps caps() const { return Caps{D, D}; }
};

// All recognized suite ids, in report order.
const std::vector<std::string>& known_suites();

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text, const std::string& base_dir);

// Deterministic by seed; coefficients drawn from {+-1, +-1/2, +-2, +-1/3};
// factors respect (alpha, i) != (beta, j).
CliffordSpec generate_random_clifford(int N, const ModeWindow& w, int count,
                                      std::uint64_t seed);

} // namespace mmkp
