#include <algorithm>
#include <random>

#include "doctest.h"

#include "symsurg/fibre_products.hpp"
#include "symsurg/fixtures.hpp"

using namespace symsurg;
using namespace symsurg::fibre;

namespace {

FibrationSketch one_node_sketch(int position, H1Class c) {
  FibrationSketch f;
  f.name = "single";
  f.critical_points.push_back({position, {c}});
  return f;
}

WeightVector weights(std::vector<Rational> w) { return {std::move(w)}; }

}  // namespace

TEST_CASE("count_fibre_product_nodes") {
  const auto e1 = fixtures::load_sketch("e1_sketch");
  CHECK(count_fibre_product_nodes(e1, e1) == 36);

  // disjoint critical positions: no nodes
  auto shifted = e1;
  for (auto& cp : shifted.critical_points) cp.position += 100;
  CHECK(count_fibre_product_nodes(e1, shifted) == 0);

  CHECK(count_fibre_product_nodes(one_node_sketch(0, {1, 0}), one_node_sketch(0, {0, 1})) == 1);

  FibrationSketch dup;
  dup.critical_points = {{0, {{1, 0}}}, {0, {{0, 1}}}};
  CHECK_THROWS_AS(count_fibre_product_nodes(dup, e1), std::invalid_argument);
}

TEST_CASE("milnor_number: pinned values") {
  const Rational third(1, 3);
  CHECK(milnor_number(weights({third, third, third, third})) == 16);
  CHECK(milnor_number(weights({third, third, third})) == 8);
  // ordinary double points have milnor number 1 in every dimension
  for (int n = 0; n <= 10; ++n)
    CHECK(milnor_number(weights(std::vector<Rational>(n + 1, Rational(1, 2)))) == 1);

  CHECK_THROWS_AS(milnor_number(weights({Rational(1)})), std::invalid_argument);
  CHECK_THROWS_AS(milnor_number(weights({Rational(3, 2)})), std::invalid_argument);
  CHECK_THROWS_AS(milnor_number(weights({Rational(0)})), std::invalid_argument);
  // (1/w - 1) = 3/2 is not an integer
  CHECK_THROWS_AS(milnor_number(weights({Rational(2, 5)})), std::invalid_argument);
}

TEST_CASE("milnor_number is permutation invariant") {
  std::mt19937 rng(13);
  std::vector<Rational> w = {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 4)};
  const long base = milnor_number(weights(w));
  CHECK(base == 1 * 2 * 4 * 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(milnor_number(weights(w)) == base);
  }
}

TEST_CASE("enumerate_fibred_spheres") {
  const auto tp = fixtures::load_sketch("triple_point_sketch");
  CHECK(enumerate_fibred_spheres(tp, tp).size() == 16);
  const auto single = one_node_sketch(0, {1, 0});
  CHECK(enumerate_fibred_spheres(single, single).size() == 1);
  CHECK(enumerate_fibred_spheres(tp, single).size() == 4);
  FibrationSketch empty;
  CHECK_THROWS_AS(enumerate_fibred_spheres(empty, tp), std::invalid_argument);
}

TEST_CASE("fibre_intersection") {
  CHECK(fibre_intersection({1, 0}, {0, 1}) == 1);
  CHECK(fibre_intersection({1, 0}, {1, 0}) == 0);
  CHECK(fibre_intersection({2, 1}, {1, 1}) == 1);
  CHECK(fibre_intersection({2, 0}, {0, 3}) == 6);
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    H1Class c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
    CHECK(fibre_intersection(c, d) == fibre_intersection(d, c));
    // vanishes exactly on proportional pairs
    CHECK((fibre_intersection(c, d) == 0) == (c.p * d.q == c.q * d.p));
  }
}

TEST_CASE("intersection_graph: triple-point graph pinned multiplicities") {
  const auto tp = fixtures::load_sketch("triple_point_sketch");
  const auto g = intersection_graph(tp, tp);
  REQUIRE(g.vertices.size() == 16);
  auto mult = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = g.edges.find({u, v});
    return it == g.edges.end() ? 0 : it->second;
  };
  // vertex (i,j) has index 4i + j; cycles 0..2 are the I_3 nodes, 3 is gamma
  CHECK(mult(0, 3) == 1);    // (0,0)-(0,3): shared first factor, |(1,0).(0,1)| = 1
  CHECK(mult(0, 5) == 0);    // (0,0)-(1,1): 0 * 0
  CHECK(mult(0, 15) == 1);   // (0,0)-(3,3): 1 * 1
  CHECK(mult(3, 12) == 1);   // (0,3)-(3,0)
  CHECK(mult(0, 1) == 0);    // (0,0)-(0,1): shared first factor, parallel cycles
  CHECK(mult(0, 4) == 0);    // (0,0)-(1,0): shared second factor, parallel cycles

  // the stricter rule drops every shared-endpoint edge
  const auto g0 = intersection_graph(tp, tp, "shared-endpoint-zero");
  auto mult0 = [&](int u, int v) {
    auto it = g0.edges.find({u, v});
    return it == g0.edges.end() ? 0 : it->second;
  };
  CHECK(mult0(0, 3) == 0);
  CHECK(mult0(0, 15) == 1);

  CHECK_THROWS_AS(intersection_graph(tp, tp, "no-such-rule"), std::invalid_argument);
  const auto rules = registered_rules();
  CHECK(std::find(rules.begin(), rules.end(), "matching-calculus") != rules.end());
  CHECK(std::find(rules.begin(), rules.end(), "shared-endpoint-zero") != rules.end());
}

TEST_CASE("graph_symmetry_check") {
  const auto tp = fixtures::load_sketch("triple_point_sketch");
  for (const auto& rule : registered_rules())
    CHECK(graph_symmetry_check(intersection_graph(tp, tp, rule)));

  auto g = intersection_graph(tp, tp);
  g.edges[{0, 1}] = 7;  // break the symmetry by hand
  CHECK_FALSE(graph_symmetry_check(g));

  SphereGraph edgeless;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) edgeless.vertices.emplace_back(i, j);
  CHECK(graph_symmetry_check(edgeless));

  SphereGraph small;
  small.vertices = {{0, 0}};
  CHECK_THROWS_AS(graph_symmetry_check(small), std::invalid_argument);
}

TEST_CASE("sketch JSON round trip") {
  const auto e1 = fixtures::load_sketch("e1_sketch");
  const auto again = sketch_from_json(sketch_to_json(e1));
  CHECK(sketch_to_json(again) == sketch_to_json(e1));
  CHECK(again.flattened_cycles().size() == 12);
}

TEST_CASE("triple-point sphere count matches the milnor number") {
  const auto tp = fixtures::load_sketch("triple_point_sketch");
  const long mu = milnor_number({{Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  CHECK(static_cast<long>(enumerate_fibred_spheres(tp, tp).size()) == mu);
}
