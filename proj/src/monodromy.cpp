#include "symsurg/monodromy.hpp"

#include <cstdlib>
#include <stdexcept>

namespace symsurg::monodromy {

SL2Matrix dehn_twist(const H1Class& c) {
  if (c.p == 0 && c.q == 0) throw std::invalid_argument("dehn_twist: zero class");
  const long long p = c.p, q = c.q;
  return {1 - p * q, p * p, -q * q, 1 + p * q};
}

SL2Matrix power(const SL2Matrix& m, long e) {
  SL2Matrix base = e >= 0 ? m : m.inverse();
  long n = std::labs(e);
  SL2Matrix acc = SL2Matrix::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

SL2Matrix word_product(const TwistWord& w) {
  SL2Matrix acc = SL2Matrix::identity();
  for (const auto& letter : w) {
    if (letter.exponent == 0) throw std::invalid_argument("word_product: zero exponent");
    acc = acc * power(dehn_twist(letter.cls), letter.exponent);
  }
  return acc;
}

FibrationReport validate_fibration(const TwistWord& w) {
  FibrationReport r;
  r.closed = word_product(w).is_identity();
  for (const auto& letter : w) r.euler += std::labs(letter.exponent);
  return r;
}

TwistWord split_fibre(const TwistWord& w, size_t index, long j) {
  if (index >= w.size()) throw std::out_of_range("split_fibre: index out of range");
  const long n = std::labs(w[index].exponent);
  if (n < 2) throw std::invalid_argument("split_fibre: letter is a single twist");
  if (j < 1 || j >= n) throw std::invalid_argument("split_fibre: need 1 <= j < n");
  const long s = w[index].exponent > 0 ? 1 : -1;
  TwistWord out(w.begin(), w.begin() + static_cast<long>(index));
  out.push_back({w[index].cls, s * j});
  out.push_back({w[index].cls, s * (n - j)});
  out.insert(out.end(), w.begin() + static_cast<long>(index) + 1, w.end());
  return out;
}

std::pair<H1Class, H1Class> adjacent_classes(const TwistWord& w, size_t i) {
  if (w.size() < 2) throw std::invalid_argument("adjacent_classes: word length must be >= 2");
  if (i >= w.size()) throw std::out_of_range("adjacent_classes: index out of range");
  return {w[i].cls, w[(i + 1) % w.size()].cls};
}

TwistWord hurwitz_move(const TwistWord& w, size_t i) {
  if (i + 1 >= w.size()) throw std::out_of_range("hurwitz_move: index out of range");
  // (X, Y) -> (X Y X^{-1}, X); X t(d) X^{-1} = t(X d).
  const SL2Matrix x = power(dehn_twist(w[i].cls), w[i].exponent);
  TwistWord out = w;
  out[i] = {x.apply(w[i + 1].cls), w[i + 1].exponent};
  out[i + 1] = w[i];
  return out;
}

TwistWord hurwitz_move_inverse(const TwistWord& w, size_t i) {
  if (i + 1 >= w.size()) throw std::out_of_range("hurwitz_move_inverse: index out of range");
  // (X, Y) -> (Y, Y^{-1} X Y)
  const SL2Matrix y = power(dehn_twist(w[i + 1].cls), w[i + 1].exponent);
  TwistWord out = w;
  out[i] = w[i + 1];
  out[i + 1] = {y.inverse().apply(w[i].cls), w[i].exponent};
  return out;
}

nlohmann::json word_to_json(const TwistWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : w) j.push_back({{"p", l.cls.p}, {"q", l.cls.q}, {"e", l.exponent}});
  return j;
}

TwistWord word_from_json(const nlohmann::json& j) {
  TwistWord w;
  for (const auto& e : j) {
    TwistLetter l{{e.at("p").get<long>(), e.at("q").get<long>()}, e.at("e").get<long>()};
    if (l.exponent == 0) throw std::invalid_argument("word_from_json: zero exponent");
    if (l.cls.p == 0 && l.cls.q == 0)
      throw std::invalid_argument("word_from_json: zero class");
    w.push_back(l);
  }
  return w;
}

nlohmann::json matrix_to_json(const SL2Matrix& m) {
  return nlohmann::json::array({{m.m00, m.m01}, {m.m10, m.m11}});
}

}  // namespace symsurg::monodromy
