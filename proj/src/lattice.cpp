#include "symsurg/lattice.hpp"

#include <algorithm>

namespace symsurg::lattice {

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

std::array<int, 3> SymTensor3::key(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("SymTensor3: index out of range");
  std::array<int, 3> a{i, j, k};
  std::sort(a.begin(), a.end());
  return a;
}

void SymTensor3::set(int i, int j, int k, const Rational& v) {
  auto a = key(i, j, k);
  if (v.is_zero())
    entries_.erase(a);
  else
    entries_[a] = v;
}

Rational SymTensor3::get(int i, int j, int k) const {
  auto it = entries_.find(key(i, j, k));
  return it == entries_.end() ? Rational(0) : it->second;
}

SymTensor3 SymTensor3::extended(int new_dim) const {
  if (new_dim < dim_) throw std::invalid_argument("SymTensor3: cannot shrink");
  SymTensor3 t(new_dim);
  t.entries_ = entries_;
  return t;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  const int n = m.rows();
  // Bareiss fraction-free elimination with row pivoting.
  RatMatrix a = m;
  Rational prev(1);
  int swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) { p = i; break; }
      if (p < 0) return Rational(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  Rational d = a.at(n - 1, n - 1);
  return (swaps % 2) ? -d : d;
}

Signature signature(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("signature: non-square matrix");
  if (!m.is_symmetric()) throw std::invalid_argument("signature: asymmetric matrix");
  const int n = m.rows();
  RatMatrix a = m;
  Signature s;
  // Congruence reduction. At step k, make a[k][k] a pivot; if the whole
  // diagonal of the trailing block is zero but some off-diagonal entry is
  // not, a hyperbolic pair contributes (1,1).
  int k = 0;
  while (k < n) {
    // find nonzero diagonal pivot in the active block
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, i).is_zero()) { p = i; break; }
    if (p >= 0) {
      if (p != k) {  // symmetric swap of rows/cols k and p
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
        for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, p));
      }
      const Rational piv = a.at(k, k);
      (piv > Rational(0) ? s.pos : s.neg) += 1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k).is_zero()) continue;
        const Rational f = a.at(i, k) / piv;
        for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        for (int j = k; j < n; ++j) a.at(j, i) = a.at(i, j);
      }
      ++k;
      continue;
    }
    // all-zero diagonal: look for an off-diagonal entry
    int bi = -1, bj = -1;
    for (int i = k; i < n && bi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!a.at(i, j).is_zero()) { bi = i; bj = j; break; }
    if (bi < 0) {  // active block is zero
      s.zero += n - k;
      break;
    }
    // hyperbolic swap: row/col bi += row/col bj makes a[bi][bi] = 2*a[bi][bj]
    for (int j = 0; j < n; ++j) a.at(bi, j) += a.at(bj, j);
    for (int i = 0; i < n; ++i) a.at(i, bi) += a.at(i, bj);
  }
  return s;
}

namespace {
UniPoly poly_det_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
  const int n = static_cast<int>(cols.size());
  if (n == 1) return m[row][cols[0]];
  UniPoly acc;
  for (int c = 0; c < n; ++c) {
    const UniPoly& e = m[row][cols[c]];
    if (e.is_zero()) continue;
    std::vector<int> sub;
    sub.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != c) sub.push_back(cols[j]);
    UniPoly minor = poly_det_rec(m, sub, row + 1);
    UniPoly term = e * minor;
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}
}  // namespace

UniPoly poly_det(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("poly_det: non-square matrix");
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return poly_det_rec(m, cols, 0);
}

RatMatrix contract(const SymTensor3& t, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != t.dim())
    throw std::invalid_argument("contract: dimension mismatch");
  const int n = t.dim();
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      Rational acc(0);
      for (int s = 0; s < n; ++s) {
        if (w[s].is_zero()) continue;
        acc += t.get(r, c, s) * w[s];
      }
      m.at(r, c) = acc;
      m.at(c, r) = acc;
    }
  return m;
}

}  // namespace symsurg::lattice
