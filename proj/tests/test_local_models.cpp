#include <cmath>

#include "doctest.h"

#include "symsurg/local_models.hpp"

using namespace symsurg::local;

namespace {
const std::complex<double> I(0.0, 1.0);

double round_trip_error(const std::vector<CPoint>& samples, double t) {
  double worst = 0;
  for (const auto& z : samples) {
    const CPoint back = cotangent_to_node(node_to_cotangent(z, t), t);
    for (size_t j = 0; j < z.size(); ++j) worst = std::max(worst, std::abs(back[j] - z[j]));
  }
  return worst;
}
}  // namespace

TEST_CASE("node_to_cotangent: pinned values") {
  // z = (1, i, 0) lies on {sum z^2 = 0}; a = e1, b = e2
  const auto p = node_to_cotangent({1.0, I, 0.0}, 0.0);
  CHECK(p.u[0] == doctest::Approx(1.0));
  CHECK(p.u[1] == doctest::Approx(0.0));
  CHECK(p.u[2] == doctest::Approx(0.0));
  CHECK(p.v[0] == doctest::Approx(0.0));
  CHECK(p.v[1] == doctest::Approx(-1.0));
  CHECK(p.v[2] == doctest::Approx(0.0));

  // z = (sqrt(2), i, 0) lies on {sum z^2 = 1}
  const double s2 = std::sqrt(2.0);
  const auto q = node_to_cotangent({s2, I, 0.0}, 1.0);
  CHECK(q.u[0] == doctest::Approx(1.0));
  CHECK(q.v[1] == doctest::Approx(-s2));

  CHECK_THROWS_AS(node_to_cotangent({0.0, 0.0, 0.0}, 0.0), std::domain_error);  // Re z = 0
  CHECK_THROWS_AS(node_to_cotangent({1.0, 0.0, 0.0}, 0.0), std::domain_error);  // off quadric
  CHECK_THROWS_AS(node_to_cotangent({}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(node_to_cotangent({1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("cotangent_to_node: pinned values and domain checks") {
  // zero section over the smoothing: u = e1, v = 0 maps to the real sphere point
  const CPoint z = cotangent_to_node({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}, 1.0);
  CHECK(std::abs(z[0] - 1.0) < 1e-12);
  CHECK(std::abs(z[1]) < 1e-12);
  // ...but has no preimage on the cone
  CHECK_THROWS_AS(cotangent_to_node({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(cotangent_to_node({{2.0, 0.0}, {0.0, 1.0}}, 0.0), std::domain_error);
  CHECK_THROWS_AS(cotangent_to_node({{1.0, 0.0}, {1.0, 0.0}}, 0.0), std::domain_error);
  CHECK_THROWS_AS(cotangent_to_node({{1.0}, {0.0, 0.0}}, 0.0), std::invalid_argument);
}

TEST_CASE("round trips stay below 1e-9") {
  for (double t : {0.0, 1.0, 0.25}) {
    const auto samples = sample_quadric(2, t, 60, 7);
    CHECK(round_trip_error(samples, t) <= 1e-9);
  }
}

TEST_CASE("radial_map") {
  // 3-4-5 triangle
  const CPoint f = radial_map({3.0, 0.0}, 4.0);
  CHECK(std::abs(f[0]) == doctest::Approx(5.0));
  CHECK(f[0].real() > 0);  // stays on the same ray

  // preserves the cone {sum z^2 = 0}
  for (const auto& z : sample_quadric(2, 0.0, 30, 11)) {
    const CPoint w = radial_map(z, 0.7);
    std::complex<double> q = 0;
    double n2 = 0, m2 = 0;
    for (size_t j = 0; j < w.size(); ++j) {
      q += w[j] * w[j];
      n2 += std::norm(z[j]);
      m2 += std::norm(w[j]);
    }
    CHECK(std::abs(q) < 1e-9 * m2);
    CHECK(m2 == doctest::Approx(n2 + 0.49));  // |F(z)|^2 = |z|^2 + lambda^2
  }

  // lambda << |z|: the map is close to the identity
  const CPoint big = radial_map({100.0, 0.0}, 0.01);
  CHECK(std::abs(big[0] - 100.0) < 1e-5);

  CHECK_THROWS_AS(radial_map({0.0, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_map({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("shell_radii") {
  const auto [inner, outer] = shell_radii(3.0, 4.0);
  CHECK(inner == doctest::Approx(3.0));
  CHECK(outer == doctest::Approx(5.0));
  CHECK_THROWS_AS(shell_radii(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(shell_radii(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("sample_quadric produces orthogonal pairs on the quadric") {
  for (double t : {0.0, 1.0}) {
    const auto samples = sample_quadric(3, t, 80, 99);
    REQUIRE(samples.size() == 80);
    for (const auto& z : samples) {
      REQUIRE(z.size() == 4);
      std::complex<double> q = 0;
      double ab = 0, na2 = 0, nb2 = 0;
      for (const auto& c : z) {
        q += c * c;
        ab += c.real() * c.imag();
        na2 += c.real() * c.real();
        nb2 += c.imag() * c.imag();
      }
      CHECK(std::abs(q - t) < 1e-9 * (na2 + nb2));
      CHECK(std::abs(ab) < 1e-9 * (na2 + nb2));
      CHECK(na2 - nb2 == doctest::Approx(t));
    }
  }
  // determinism
  CHECK(sample_quadric(2, 0.0, 5, 42)[3][0] == sample_quadric(2, 0.0, 5, 42)[3][0]);
  CHECK_THROWS_AS(sample_quadric(0, 0.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_quadric(2, -1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("symplectic pullback residual is below 1e-6") {
  for (double t : {0.0, 1.0}) {
    const auto samples = sample_quadric(2, t, 100, 5);
    CHECK(symplectic_pullback_residual(samples, t) <= 1e-6);
  }
  CHECK_THROWS_AS(symplectic_pullback_residual({}, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("residual converges at second order in the step") {
  const auto samples = sample_quadric(2, 0.0, 40, 17);
  const double r3 = symplectic_pullback_residual(samples, 0.0, 1e-3);
  const double r4 = symplectic_pullback_residual(samples, 0.0, 1e-4);
  const double r5 = symplectic_pullback_residual(samples, 0.0, 1e-5);
  // shrinking h by 10 should shrink the error by ~100 until roundoff
  CHECK(r4 <= r3 / 25.0);
  CHECK(r5 <= std::max(r4 / 25.0, 1e-9));
  CHECK(r5 <= 1e-6);
}

TEST_CASE("packing ratio equals 1/2 on the cone, less off it") {
  const auto cone = sample_quadric(2, 0.0, 100, 3);
  const double p0 = packing_inequality_check(cone);
  CHECK(p0 <= 0.5 + 1e-12);
  CHECK(std::abs(p0 - 0.5) <= 1e-9);

  const auto smoothing = sample_quadric(2, 1.0, 100, 4);
  CHECK(packing_inequality_check(smoothing) < 0.5);

  CHECK_THROWS_AS(packing_inequality_check({CPoint{0.0, 0.0}}), std::invalid_argument);
}
