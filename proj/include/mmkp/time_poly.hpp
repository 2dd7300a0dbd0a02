#pragma once

#include "mmkp/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mmkp {

// Time variables t_{alpha,k}. Identities in the doubled alphabet (t, t')
// use copy 0 for t and copy 1 for t'. The packed id gives the canonical
// variable order: copy-major, then component, then order.
struct TimeVar {
    int copy;
    int component;  // alpha, 1-based
    int order;      // k >= 1
};

using VarId = int;

inline VarId var_id(int copy, int component, int order) {
    return (copy << 16) | (component << 8) | order;
}

inline TimeVar var_of(VarId id) {
    return TimeVar{id >> 16, (id >> 8) & 0xff, id & 0xff};
}

// Sorted (var, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<VarId, int>>;

int monomial_degree(const Monomial& m);
int monomial_degree_copy(const Monomial& m, int copy);
// sum of k*e over variables of the given copy and component
int monomial_weighted_degree(const Monomial& m, int copy, int component);
int monomial_max_order(const Monomial& m, int copy);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Per-copy plain-degree caps; -1 leaves a copy uncapped. Products discard
// monomials beyond a cap (the truncation ideal). Binary operations insist
// both operands carry identical caps so truncated data never silently mixes
// with exact data.
struct Caps {
    int cap0 = -1;
    int cap1 = -1;
    bool admits(const Monomial& m) const;
    bool operator==(const Caps&) const = default;
};

class TimePolynomial {
public:
    TimePolynomial() = default;
    explicit TimePolynomial(Caps caps) : caps_(caps) {}

    static TimePolynomial constant(const Rational& c, Caps caps = {});
    static TimePolynomial variable(int copy, int component, int order,
                                   Caps caps = {}, const Rational& coeff = Rational(1));

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Caps caps() const { return caps_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({}); }

    // discards the term if the caps reject the monomial
    void add_term(const Monomial& m, const Rational& c);

    TimePolynomial operator+(const TimePolynomial& o) const;
    TimePolynomial operator-(const TimePolynomial& o) const;
    TimePolynomial operator*(const TimePolynomial& o) const;
    TimePolynomial operator-() const;
    bool operator==(const TimePolynomial& o) const;

    TimePolynomial scaled(const Rational& c) const;
    TimePolynomial derivative(int copy, int component, int order) const;

    // largest plain degree of any stored monomial restricted to one copy
    int plain_degree(int copy) const;
    // largest sum k*e over one component of one copy (the Miwa depth bound)
    int weighted_degree(int copy, int component) const;
    // largest order k with nonzero dependence in one copy
    int max_order(int copy) const;

    // keeps only monomials with per-copy degrees <= d0 / d1 (-1 = keep all)
    TimePolynomial restricted(int d0, int d1 = -1) const;
    // same terms under new caps; throws if a stored monomial violates them
    TimePolynomial with_caps(Caps caps) const;
    // moves every copy-0 variable to the given copy
    TimePolynomial relabel_copy(int copy) const;

    // exact power-series inverse through the caps; requires nonzero constant
    TimePolynomial series_inverse() const;

    // canonical text: terms sorted, `coeff * t[alpha,k]^e ...`, primed copy
    // printed as tp[alpha,k]
    std::string to_string() const;

private:
    void check_compatible(const TimePolynomial& o) const;
    std::map<Monomial, Rational> terms_;
    Caps caps_;
};

TimePolynomial operator*(const Rational& c, const TimePolynomial& p);

} // namespace mmkp
