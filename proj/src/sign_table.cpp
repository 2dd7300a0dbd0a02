#include "mmkp/sign_table.hpp"

namespace mmkp {

int sign_eps(int alpha, int beta, const ChargeVector& p) {
    if (alpha == beta) return 1;
    if (alpha < beta) {
        int s = 0;
        for (int g = alpha + 1; g <= beta; ++g) s += p.at(g);
        return (s % 2) ? -1 : 1;
    }
    int s = 0;
    for (int g = beta + 1; g <= alpha; ++g) s += p.at(g);
    return (s % 2) ? 1 : -1;
}

int sign_eps(int alpha, int beta, int p) {
    if (alpha == beta) return 1;
    int s = (alpha < beta ? beta - alpha : alpha - beta) * p;
    int base = (s % 2) ? -1 : 1;
    return alpha < beta ? base : -base;
}

} // namespace mmkp
