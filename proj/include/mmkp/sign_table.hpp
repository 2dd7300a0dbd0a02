#pragma once

#include "mmkp/fock.hpp"

namespace mmkp {

// eps_{alpha beta}(p): +1 on the diagonal; (-1)^{p_{alpha+1}+...+p_beta} for
// alpha < beta; -(-1)^{p_{beta+1}+...+p_alpha} for alpha > beta.
int sign_eps(int alpha, int beta, const ChargeVector& p);
// uniform charge p_gamma = p
int sign_eps(int alpha, int beta, int p);

} // namespace mmkp
