#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace symsurg::monodromy {

/// Homology class p*a + q*b of a simple closed curve on the torus,
/// (p, q) != (0, 0).
struct H1Class {
  long p = 0, q = 0;
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

struct SL2Matrix {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  static SL2Matrix identity() { return {}; }
  long long det() const { return m00 * m11 - m01 * m10; }
  bool is_identity() const { return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1; }
  SL2Matrix inverse() const { return {m11, -m01, -m10, m00}; }  // det = 1
  friend SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
  /// Column-vector action.
  H1Class apply(const H1Class& c) const {
    return {static_cast<long>(m00 * c.p + m01 * c.q),
            static_cast<long>(m10 * c.p + m11 * c.q)};
  }
};

struct TwistLetter {
  H1Class cls;
  long exponent = 1;  // nonzero
};

/// Ordered word of powers of Dehn twists; the matrix product is taken
/// left to right in word order.
using TwistWord = std::vector<TwistLetter>;

/// Matrix of the Dehn twist t(C), C = (p, q): x -> x + <x, C> C with
/// <x, C> = p x2 - q x1, giving [[1 - pq, p^2], [-q^2, 1 + pq]].
SL2Matrix dehn_twist(const H1Class& c);

SL2Matrix power(const SL2Matrix& m, long e);

SL2Matrix word_product(const TwistWord& w);

struct FibrationReport {
  bool closed = false;
  long euler = 0;
};

/// closed = product is the identity; euler counts one I_1 node per single twist.
FibrationReport validate_fibration(const TwistWord& w);

/// Replaces t(C)^n (n = |exponent| >= 2) at `index` by adjacent t(C)^j,
/// t(C)^(n-j); the word product is unchanged.
TwistWord split_fibre(const TwistWord& w, size_t index, long j);

/// Classes of letters i and i+1 (cyclically).
std::pair<H1Class, H1Class> adjacent_classes(const TwistWord& w, size_t i);

/// Elementary Hurwitz move on letters i, i+1 of a word of single twists
/// (exponents +-1): (x, y) -> (x y x^{-1}, x), preserving the product.
/// The conjugated letter is the twist in the image class of cls_{i+1} under
/// the matrix of letter i.
TwistWord hurwitz_move(const TwistWord& w, size_t i);

/// Inverse move: (x, y) -> (y, y^{-1} x y).
TwistWord hurwitz_move_inverse(const TwistWord& w, size_t i);

nlohmann::json word_to_json(const TwistWord& w);
TwistWord word_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const SL2Matrix& m);

}  // namespace symsurg::monodromy
