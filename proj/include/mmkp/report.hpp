#pragma once

#include "mmkp/scenario.hpp"

namespace mmkp {

struct CheckVerdict {
    std::string id;
    bool pass = false;
    long residual_monomials = 0;
    long compared = 0;  // coefficient objects that entered the assertion
    double elapsed_ms = 0.0;
};

struct Report {
    Scenario scenario;
    std::string clifford_text;  // the resolved element
    std::string tau_text;       // diagonal tau entries, one `p=<p>: <poly>` line each
    std::string negative_control;
    bool window_stable = false;
    std::vector<CheckVerdict> checks;  // sorted by id
    double total_ms = 0.0;

    bool pass() const;
    std::string human() const;
    // canonical structured form; byte-stable for a given scenario + seed
    // except the elapsed-time fields
    std::string json_text() const;
};

// Full run: validate, window-stability gate, tau table, selected checks.
// negative_control: "" | "flip-eps" | "bump-schur" (restricts the run to the
// bilinear suite with the corruption applied).
Report run_scenario(const Scenario& sc, const std::string& negative_control = "");

} // namespace mmkp
