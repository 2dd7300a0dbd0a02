#pragma once

#include "mmkp/laurent.hpp"

#include <map>
#include <vector>

namespace mmkp {

class MatrixSeries {
public:
    MatrixSeries() = default;
    explicit MatrixSeries(int N) : N_(N), e_(N * N) {}
    static MatrixSeries identity(int N, Caps caps);
    static MatrixSeries unit(int N, int alpha, Caps caps);  // E_alpha idempotent

    int dim() const { return N_; }
    TimePolynomial& at(int a, int b) { return e_[(a - 1) * N_ + (b - 1)]; }
    const TimePolynomial& at(int a, int b) const { return e_[(a - 1) * N_ + (b - 1)]; }

    MatrixSeries operator+(const MatrixSeries& o) const;
    MatrixSeries operator-(const MatrixSeries& o) const;
    MatrixSeries operator*(const MatrixSeries& o) const;
    MatrixSeries scaled(const Rational& c) const;
    MatrixSeries derivative(int copy, int component, int order) const;
    MatrixSeries restricted(int d0, int d1 = -1) const;
    bool is_zero() const;
    bool operator==(const MatrixSeries& o) const;
    long monomial_count() const;

private:
    int N_ = 0;
    std::vector<TimePolynomial> e_;
};

// N x N matrix of Laurent polynomials (one Baker-Akhiezer sector).
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int N, Symbol sym)
        : N_(N), e_(N * N, LaurentPolynomial(sym, -LaurentPolynomial::unbounded)) {}

    int dim() const { return N_; }
    LaurentPolynomial& at(int a, int b) { return e_[(a - 1) * N_ + (b - 1)]; }
    const LaurentPolynomial& at(int a, int b) const { return e_[(a - 1) * N_ + (b - 1)]; }

    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    LaurentMatrix shifted(int k) const;
    LaurentMatrix scaled(const Rational& c) const;
    // drop the low-side truncation bound on every entry (content unchanged);
    // check assemblies do this so cross-sector products keep deep exponents
    LaurentMatrix deepened() const;
    LaurentMatrix time_derivative(int copy, int component, int order) const;
    LaurentMatrix restricted(int d0, int d1 = -1) const;
    bool is_zero() const;
    bool operator==(const LaurentMatrix& o) const;
    long monomial_count() const;

private:
    int N_ = 0;
    std::vector<LaurentPolynomial> e_;
};

LaurentMatrix operator*(const MatrixSeries& m, const LaurentMatrix& f);
LaurentMatrix operator*(const LaurentMatrix& f, const MatrixSeries& m);
LaurentMatrix operator*(const LaurentMatrix& f, const LaurentMatrix& g);

// A = sum_k A_k(p) e^{-k dp} with p-indexed coefficient tables. A shift key
// absent from the map is the zero term; a sector missing inside a present
// shift is unknown there, and compositions invalidate exactly the output
// sectors that would need it (window erosion).
struct PseudoDiffOp {
    int N = 0;
    std::map<int, std::map<int, MatrixSeries>> terms;  // shift k -> (p -> coeff)

    bool empty() const;
    int min_shift() const;  // smallest stored k (most positive power of e^{dp})
    int max_shift() const;
    // sectors where every stored shift has a coefficient
    std::vector<int> common_sectors() const;
    long monomial_count() const;
};

enum class ProjPart { plus, minus };  // plus keeps e^{m dp} with m >= 0 (stored k <= 0)

PseudoDiffOp pdo_identity(int N, int p_lo, int p_hi, Caps caps);
// e^{m dp} over sectors [p_lo, p_hi] (stored at shift key -m)
PseudoDiffOp pdo_shift_op(int m, int N, int p_lo, int p_hi, Caps caps);
// E_alpha e^{m dp}
PseudoDiffOp pdo_unit_shift_op(int alpha, int m, int N, int p_lo, int p_hi, Caps caps);

PseudoDiffOp pdo_add(const PseudoDiffOp& A, const PseudoDiffOp& B);
PseudoDiffOp pdo_scale(const PseudoDiffOp& A, const Rational& c);
PseudoDiffOp pdo_time_derivative(const PseudoDiffOp& A, int copy, int component, int order);
// (AB)(p) = sum_m [sum_k A_k(p) B_{m-k}(p-k)] e^{-m dp}, shifts kept through
// K_trunc; throws when window erosion leaves no valid sector at all
PseudoDiffOp pdo_mul(const PseudoDiffOp& A, const PseudoDiffOp& B, int K_trunc);
PseudoDiffOp pdo_project(const PseudoDiffOp& A, ProjPart part);
// A = I + strictly-negative-power terms; unique X with A X = I through K_trunc
PseudoDiffOp pdo_invert(const PseudoDiffOp& A, int K_trunc);
// drop shifts whose every stored sector is the zero matrix (sound when the
// coefficient family is known to vanish identically at that shift)
PseudoDiffOp prune_zero_shifts(const PseudoDiffOp& A);

// Coefficient-exact agreement on the common (shift, sector) support; the
// count reports how many coefficient matrices were actually compared.
struct AgreementReport {
    long compared = 0;
    bool agree = true;
};
AgreementReport pdo_common_agreement(const PseudoDiffOp& A, const PseudoDiffOp& B);

// Per-sector z-symbol matrices (Baker-Akhiezer data) that operators act on.
struct WaveSymbolFamily {
    int N = 0;
    std::map<int, LaurentMatrix> sectors;

    bool has(int p) const { return sectors.count(p) != 0; }
    const LaurentMatrix& at(int p) const;
};

// (A F)(p) = sum_k A_k(p) F(p-k)
WaveSymbolFamily pdo_apply(const PseudoDiffOp& A, const WaveSymbolFamily& F);
// (F A)(p) = sum_k F(p+k) A_k(p+k) (left action rule f e^{-dp} = e^{dp} f)
WaveSymbolFamily pdo_left_apply(const WaveSymbolFamily& F, const PseudoDiffOp& A);

} // namespace mmkp
