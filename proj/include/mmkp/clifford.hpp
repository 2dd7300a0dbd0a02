#pragma once

#include "mmkp/fock.hpp"

#include <string>
#include <vector>

namespace mmkp {

// One factor exp(c psi_i^{(alpha)} psi*_j^{(beta)}) = 1 + c psi_i psi*_j
// (nilpotent because (alpha,i) != (beta,j)).
struct CliffordFactor {
    int alpha = 1;
    int i = 0;
    int beta = 1;
    int j = -1;
    Rational c = Rational(1);
    bool operator==(const CliffordFactor&) const = default;
};

struct CliffordSpec {
    std::vector<CliffordFactor> factors;

    bool empty() const { return factors.empty(); }
    void validate(int N, const ModeWindow& w) const;
    // sum of max(i - j, 0): bounds the weighted time degree any tau built
    // from this element can reach (each current mode J_k lowers the total
    // mode index by k)
    int energy() const;

    // text lines `factor alpha i beta j num/den`
    std::string serialize() const;
    static CliffordSpec parse(const std::string& text);
    static CliffordSpec parse_file(const std::string& path);
};

// factors applied right-to-left, each acting as 1 + c psi psi*
FockVector apply_clifford(const CliffordSpec& g, const FockVector& v);

} // namespace mmkp
