#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "symsurg/rational.hpp"

namespace symsurg::lattice {

/// Small dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("RatMatrix: nonpositive dimension");
  }
  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Fully symmetric rational 3-tensor; only sorted index triples stored,
/// absent triples are zero.
class SymTensor3 {
 public:
  explicit SymTensor3(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("SymTensor3: nonpositive dim");
  }

  int dim() const { return dim_; }
  void set(int i, int j, int k, const Rational& v);
  Rational get(int i, int j, int k) const;
  const std::map<std::array<int, 3>, Rational>& entries() const { return entries_; }

  /// Extends to a larger dimension; old entries keep their indices.
  SymTensor3 extended(int new_dim) const;

 private:
  std::array<int, 3> key(int i, int j, int k) const;
  int dim_;
  std::map<std::array<int, 3>, Rational> entries_;
};

/// Univariate polynomial over the rationals; coefficients_[i] is the
/// coefficient of the i-th power. Trailing coefficient nonzero unless zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
  Rational coeff(int power) const {
    return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : Rational(0);
  }
  Rational eval(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

using PolyMatrix = std::vector<std::vector<UniPoly>>;

/// Exact determinant by Bareiss fraction-free elimination.
Rational det(const RatMatrix& m);

/// Exact signature (positive, negative, zero eigenvalue counts) of a
/// symmetric matrix via rational congruence reduction.
struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const RatMatrix& m);

/// Exact determinant of a square matrix of polynomials (Laplace expansion;
/// intended for the small dimensions in scope).
UniPoly poly_det(const PolyMatrix& m);

/// M[i][j] = sum_k t(i,j,k) * w[k]; always symmetric.
RatMatrix contract(const SymTensor3& t, const std::vector<Rational>& w);

}  // namespace symsurg::lattice
