#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace symsurg::local {

using CPoint = std::vector<std::complex<double>>;

/// Point of T*S^n in the round-metric model {(u,v) : |u| = 1, <u,v> = 0}.
struct CotangentPoint {
  std::vector<double> u;
  std::vector<double> v;
};

constexpr double kOnQuadricTol = 1e-9;

/// (z_j = a_j + i b_j) -> (a_j/|a|, -|a| b_j). Input must satisfy
/// sum z_j^2 = t within tolerance, with Re(z) != 0.
CotangentPoint node_to_cotangent(const CPoint& z, double t);

/// Inverse of the map above on {sum z^2 = t}; for t = 0 the zero-section
/// (v = 0) has no preimage.
CPoint cotangent_to_node(const CotangentPoint& p, double t);

/// z -> (sqrt(|z|^2 + lambda^2)/|z|) z; preserves the quadric and satisfies
/// |F(z)|^2 = |z|^2 + lambda^2.
CPoint radial_map(const CPoint& z, double lambda);

/// Shell between the lambda-ball and the sqrt(lambda^2 + delta^2)-ball.
std::pair<double, double> shell_radii(double lambda, double delta);

/// Seeded sampler of points on {sum z^2 = t} (t >= 0 real): orthogonal
/// real pair (a, b) with |a|^2 - |b|^2 = t.
std::vector<CPoint> sample_quadric(int n, double t, int count, std::uint64_t seed);

/// Max discrepancy between sum da^db on the quadric tangent space and the
/// pullback of the cotangent symplectic form through the finite-difference
/// Jacobian of the coordinate map. The map matches sum dv^du (sign fixed
/// empirically; see tests).
double symplectic_pullback_residual(const std::vector<CPoint>& samples, double t,
                                    double fd_step = 1e-5);

/// Max over samples of |Re z||Im z| / |z|^2; on the quadric sum z^2 = 0
/// this equals 1/2 exactly.
double packing_inequality_check(const std::vector<CPoint>& samples);

}  // namespace symsurg::local
