#include "mmkp/rational.hpp"

namespace mmkp {

Rational rat(long num, long den) {
    if (den == 0) throw ConfigError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw ConfigError("rational literal with zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad rational literal: " + s);
    }
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace mmkp
