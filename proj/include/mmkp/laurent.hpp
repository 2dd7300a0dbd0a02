#pragma once

#include "mmkp/time_poly.hpp"

#include <limits>
#include <map>

namespace mmkp {

enum class Symbol { z, mu, nu };

const char* symbol_name(Symbol s);

// Finite Laurent polynomial in one formal spectral symbol with TimePolynomial
// coefficients. `floor` is the low-side truncation boundary (-Z_max in the
// checks): multiplication silently discards exponents below it, which is sound
// because scenario validation guarantees the true content never reaches that
// deep. `ceil` bounds positive-exponent growth; constructors set it to the
// natural support bound and arithmetic never needs to exceed it.
class LaurentPolynomial {
public:
    static constexpr int unbounded = std::numeric_limits<int>::max() / 4;

    LaurentPolynomial() = default;
    LaurentPolynomial(Symbol sym, int floor, int ceil = unbounded)
        : sym_(sym), floor_(floor), ceil_(ceil) {}

    static LaurentPolynomial mono(Symbol sym, int exponent, TimePolynomial coeff,
                                  int floor, int ceil = unbounded);

    Symbol symbol() const { return sym_; }
    int floor() const { return floor_; }
    int ceil() const { return ceil_; }
    const std::map<int, TimePolynomial>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    TimePolynomial coefficient(int exponent) const;
    // discards terms outside [floor, ceil] or with zero coefficient
    void add_term(int exponent, const TimePolynomial& coeff);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const;

    LaurentPolynomial scaled(const Rational& c) const;
    // multiply by symbol^k (shifts truncation bounds along)
    LaurentPolynomial shifted(int k) const;
    // formal d/dsymbol
    LaurentPolynomial symbol_derivative() const;
    // entrywise t-derivative
    LaurentPolynomial time_derivative(int copy, int component, int order) const;
    // entrywise per-copy degree restriction
    LaurentPolynomial restricted(int d0, int d1 = -1) const;
    // same content under new truncation bounds; throws if stored content
    // violates them (deepening the floor or raising the ceil is always safe)
    LaurentPolynomial with_bounds(int floor, int ceil = unbounded) const;

    int min_exponent() const;
    int max_exponent() const;
    std::size_t support_size() const { return c_.size(); }
    long monomial_count() const;

    std::string to_string() const;

private:
    void check_compatible(const LaurentPolynomial& o) const;
    Symbol sym_ = Symbol::z;
    int floor_ = -unbounded;
    int ceil_ = unbounded;
    std::map<int, TimePolynomial> c_;
};

// Coefficient of symbol^{-1}; throws when the truncation floor has eaten the
// residue position (names the needed depth).
TimePolynomial residue(const LaurentPolynomial& l);

// coefficient-wise product with a plain polynomial (bounds preserved)
LaurentPolynomial operator*(const TimePolynomial& c, const LaurentPolynomial& l);

} // namespace mmkp
