#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symsurg {

/// Arbitrary-precision rational, always reduced, denominator > 0.
/// Thin wrapper over GMP's mpq_class that canonicalizes on construction;
/// GMP keeps canonical form under arithmetic.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(RawTag{}, q);
  }

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(RawTag{}, a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(RawTag{}, a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(RawTag{}, a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(RawTag{}, a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(RawTag{}, -q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  struct RawTag {};
  Rational(RawTag, mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace symsurg
