#include <random>

#include "doctest.h"

#include "symsurg/fixtures.hpp"
#include "symsurg/monodromy.hpp"

using namespace symsurg::monodromy;

namespace {
const H1Class a{1, 0}, b{0, 1}, apb{1, 1}, a2pb{2, 1};

TwistWord four_cubes() { return {{a, 3}, {b, 3}, {apb, 3}, {a2pb, 3}}; }

TwistWord random_word(std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<int> exp(0, 1);
  TwistWord w;
  while (w.size() < len) {
    H1Class c{coord(rng), coord(rng)};
    if (c.p == 0 && c.q == 0) continue;
    w.push_back({c, exp(rng) ? 1 : -1});
  }
  return w;
}
}  // namespace

TEST_CASE("dehn_twist matches the standard matrices") {
  CHECK(dehn_twist(a) == SL2Matrix{1, 1, 0, 1});
  CHECK(dehn_twist(b) == SL2Matrix{1, 0, -1, 1});
  CHECK(dehn_twist(apb) == SL2Matrix{0, 1, -1, 2});
  CHECK(dehn_twist(a2pb) == SL2Matrix{-1, 4, -1, 3});
  CHECK_THROWS_AS(dehn_twist(H1Class{0, 0}), std::invalid_argument);
}

TEST_CASE("dehn twists are parabolic, fix their class, ignore its sign") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    H1Class c{coord(rng), coord(rng)};
    if (c.p == 0 && c.q == 0) continue;
    const SL2Matrix m = dehn_twist(c);
    CHECK(m.det() == 1);
    CHECK(m.m00 + m.m11 == 2);
    CHECK(m.apply(c) == c);
    CHECK(dehn_twist(H1Class{-c.p, -c.q}) == m);
  }
}

TEST_CASE("word_product: the four cubes compose to the identity") {
  CHECK(word_product(four_cubes()).is_identity());
  CHECK(word_product({}).is_identity());
  CHECK(word_product({{a, 1}, {a, -1}}).is_identity());
}

TEST_CASE("word_product is a homomorphism on concatenation") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 25; ++trial) {
    TwistWord w1 = random_word(rng, 4), w2 = random_word(rng, 3);
    TwistWord cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(word_product(cat) == word_product(w1) * word_product(w2));
  }
}

TEST_CASE("validate_fibration") {
  const auto rep = validate_fibration(four_cubes());
  CHECK(rep.closed);
  CHECK(rep.euler == 12);
  CHECK(validate_fibration({}).closed);
  CHECK(validate_fibration({}).euler == 0);
  const auto single = validate_fibration({{a, 1}});
  CHECK_FALSE(single.closed);
  CHECK(single.euler == 1);
}

TEST_CASE("split_fibre preserves the product") {
  const auto w = four_cubes();
  // split I_3(b) into I_1 + I_2
  const auto split = split_fibre(w, 1, 1);
  CHECK(split.size() == 5);
  CHECK(split[1].exponent == 1);
  CHECK(split[2].exponent == 2);
  CHECK(word_product(split) == word_product(w));
  // split an I_2 into I_1 + I_1
  const auto again = split_fibre(split, 2, 1);
  CHECK(word_product(again) == word_product(w));
  CHECK_THROWS_AS(split_fibre(w, 1, 3), std::invalid_argument);  // j = n rejected
  CHECK_THROWS_AS(split_fibre(w, 9, 1), std::out_of_range);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    TwistWord v = random_word(rng, 3);
    v[1].exponent = 2 + static_cast<long>(rng() % 3);
    const long n = v[1].exponent;
    const long j = 1 + static_cast<long>(rng() % (n - 1));
    CHECK(word_product(split_fibre(v, 1, j)) == word_product(v));
  }
}

TEST_CASE("adjacent_classes is cyclic") {
  const auto w = four_cubes();
  CHECK(adjacent_classes(w, 0) == std::pair{a, b});
  CHECK(adjacent_classes(w, 3) == std::pair{a2pb, a});  // wraps around
  CHECK_THROWS_AS(adjacent_classes({{a, 1}}, 0), std::invalid_argument);
}

TEST_CASE("hurwitz_move preserves the product and inverts") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    TwistWord w = random_word(rng, 5);
    const size_t i = rng() % 4;
    const TwistWord moved = hurwitz_move(w, i);
    CHECK(word_product(moved) == word_product(w));
    const TwistWord back = hurwitz_move_inverse(moved, i);
    REQUIRE(back.size() == w.size());
    for (size_t k = 0; k < w.size(); ++k) {
      CHECK(back[k].cls == w[k].cls);
      CHECK(back[k].exponent == w[k].exponent);
    }
  }
  // the four-cube word flattened to 12 single twists
  TwistWord flat;
  for (const auto& l : four_cubes())
    for (int k = 0; k < 3; ++k) flat.push_back({l.cls, 1});
  for (size_t i = 0; i + 1 < flat.size(); ++i)
    CHECK(word_product(hurwitz_move(flat, i)).is_identity());
  CHECK_THROWS_AS(hurwitz_move(flat, 11), std::out_of_range);
}

TEST_CASE("word JSON round trip") {
  const auto w = symsurg::fixtures::load_word("e1_four_I3");
  CHECK(word_product(w).is_identity());
  const auto again = word_from_json(word_to_json(w));
  CHECK(word_to_json(again) == word_to_json(w));
  CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"([{"p":0,"q":0,"e":1}])")),
                  std::invalid_argument);
}
