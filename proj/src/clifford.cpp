#include "mmkp/clifford.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mmkp {

void CliffordSpec::validate(int N, const ModeWindow& w) const {
    for (auto& f : factors) {
        if (f.alpha < 1 || f.alpha > N || f.beta < 1 || f.beta > N)
            throw ConfigError("clifford factor component outside 1.." + std::to_string(N));
        if (!w.contains(f.i) || !w.contains(f.j))
            throw ConfigError("clifford factor mode outside window [" + std::to_string(w.lo) +
                              "," + std::to_string(w.hi) + ")");
        if (f.alpha == f.beta && f.i == f.j)
            throw ConfigError("clifford factor with equal creation and annihilation mode "
                              "is not nilpotent; use pairs of off-diagonal factors instead");
    }
}

int CliffordSpec::energy() const {
    int e = 0;
    for (auto& f : factors) e += std::max(f.i - f.j, 0);
    return e;
}

std::string CliffordSpec::serialize() const {
    std::ostringstream os;
    for (auto& f : factors)
        os << "factor " << f.alpha << " " << f.i << " " << f.beta << " " << f.j << " "
           << format_rational(f.c) << "\n";
    return os.str();
}

CliffordSpec CliffordSpec::parse(const std::string& text) {
    CliffordSpec g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head != "factor")
            throw ConfigError("clifford line " + std::to_string(lineno) +
                              ": expected `factor alpha i beta j num/den`");
        CliffordFactor f;
        std::string coeff;
        if (!(ls >> f.alpha >> f.i >> f.beta >> f.j >> coeff))
            throw ConfigError("clifford line " + std::to_string(lineno) + ": malformed factor");
        f.c = parse_rational(coeff);
        g.factors.push_back(f);
    }
    return g;
}

CliffordSpec CliffordSpec::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open clifford spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

FockVector apply_clifford(const CliffordSpec& g, const FockVector& v) {
    FockVector cur = v;
    for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
        FockVector bil = apply_fermion(FermionKind::psi_star, it->beta, it->j, cur);
        bil = apply_fermion(FermionKind::psi, it->alpha, it->i, bil);
        cur.merge(bil.scaled(it->c));
    }
    return cur;
}

} // namespace mmkp
