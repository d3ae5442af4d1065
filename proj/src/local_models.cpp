#include "symsurg/local_models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace symsurg::local {

namespace {

std::pair<std::vector<double>, std::vector<double>> split(const CPoint& z) {
  std::vector<double> a(z.size()), b(z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    a[j] = z[j].real();
    b[j] = z[j].imag();
  }
  return {a, b};
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

std::complex<double> quadric_value(const CPoint& z) {
  std::complex<double> s = 0;
  for (const auto& c : z) s += c * c;
  return s;
}

void require_on_quadric(const CPoint& z, double t) {
  double scale = 0;
  for (const auto& c : z) scale += std::norm(c);
  const double err = std::abs(quadric_value(z) - std::complex<double>(t, 0));
  if (err > kOnQuadricTol * std::max(1.0, scale))
    throw std::domain_error("point is off the quadric beyond tolerance");
}

// the raw coordinate map, defined wherever Re(z) != 0
CotangentPoint raw_map(const CPoint& z) {
  auto [a, b] = split(z);
  const double na = norm(a);
  if (na == 0) throw std::domain_error("node_to_cotangent: Re(z) = 0");
  CotangentPoint p;
  p.u.resize(a.size());
  p.v.resize(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    p.u[j] = a[j] / na;
    p.v[j] = -na * b[j];
  }
  return p;
}

}  // namespace

CotangentPoint node_to_cotangent(const CPoint& z, double t) {
  if (z.empty()) throw std::invalid_argument("node_to_cotangent: empty point");
  if (t < 0) throw std::invalid_argument("node_to_cotangent: t must be >= 0");
  require_on_quadric(z, t);
  return raw_map(z);
}

CPoint cotangent_to_node(const CotangentPoint& p, double t) {
  if (p.u.size() != p.v.size() || p.u.empty())
    throw std::invalid_argument("cotangent_to_node: malformed point");
  if (t < 0) throw std::invalid_argument("cotangent_to_node: t must be >= 0");
  const double nu = norm(p.u);
  const double nv = norm(p.v);
  if (std::abs(nu - 1.0) > 1e-6 || std::abs(dot(p.u, p.v)) > 1e-6 * std::max(1.0, nv))
    throw std::domain_error("cotangent_to_node: point violates |u|=1, <u,v>=0");
  if (t == 0 && nv == 0)
    throw std::domain_error("cotangent_to_node: zero-section has no node preimage at t=0");
  // |a|^2 - |b|^2 = t with b = -v/|a| gives s^2 - t s - |v|^2 = 0, s = |a|^2.
  const double s = 0.5 * (t + std::sqrt(t * t + 4.0 * nv * nv));
  const double na = std::sqrt(s);
  CPoint z(p.u.size());
  for (size_t j = 0; j < z.size(); ++j) z[j] = {na * p.u[j], -p.v[j] / na};
  return z;
}

CPoint radial_map(const CPoint& z, double lambda) {
  double nz2 = 0;
  for (const auto& c : z) nz2 += std::norm(c);
  if (nz2 == 0) throw std::invalid_argument("radial_map: z = 0");
  if (lambda <= 0) throw std::invalid_argument("radial_map: lambda must be > 0");
  const double f = std::sqrt((nz2 + lambda * lambda) / nz2);
  CPoint out(z.size());
  for (size_t j = 0; j < z.size(); ++j) out[j] = f * z[j];
  return out;
}

std::pair<double, double> shell_radii(double lambda, double delta) {
  if (delta <= 0) throw std::invalid_argument("shell_radii: delta must be > 0");
  if (lambda < 0) throw std::invalid_argument("shell_radii: lambda must be >= 0");
  return {lambda, std::sqrt(lambda * lambda + delta * delta)};
}

std::vector<CPoint> sample_quadric(int n, double t, int count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_quadric: n must be >= 1");
  if (t < 0) throw std::invalid_argument("sample_quadric: t must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  const int m = n + 1;
  std::vector<CPoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> a(m), b(m);
    for (auto& x : a) x = gauss(rng);
    for (auto& x : b) x = gauss(rng);
    // orthogonalize b against a
    const double na2 = dot(a, a);
    if (na2 < 1e-12) continue;
    const double f = dot(a, b) / na2;
    for (int j = 0; j < m; ++j) b[j] -= f * a[j];
    const double nb = norm(b);
    if (nb < 1e-9) continue;
    // set |b|^2 = u, |a|^2 = t + u so that sum z^2 = |a|^2 - |b|^2 = t
    const double u = scale(rng);
    const double fb = std::sqrt(u) / nb;
    const double fa = std::sqrt(t + u) / std::sqrt(na2);
    CPoint z(m);
    for (int j = 0; j < m; ++j) z[j] = {fa * a[j], fb * b[j]};
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

std::vector<double> flatten(const CPoint& z) {
  auto [a, b] = split(z);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

CPoint unflatten(const std::vector<double>& x) {
  const size_t m = x.size() / 2;
  CPoint z(m);
  for (size_t j = 0; j < m; ++j) z[j] = {x[j], x[m + j]};
  return z;
}

// orthonormal basis of the tangent space of {sum z^2 = t} at z (real dim 2m-2)
std::vector<std::vector<double>> quadric_tangent_basis(const CPoint& z) {
  auto [a, b] = split(z);
  const size_t m = a.size();
  // gradients of Re(sum z^2) and Im(sum z^2): (a, -b) and (b, a) up to scale
  std::vector<std::vector<double>> normals(2, std::vector<double>(2 * m));
  for (size_t j = 0; j < m; ++j) {
    normals[0][j] = a[j];
    normals[0][m + j] = -b[j];
    normals[1][j] = b[j];
    normals[1][m + j] = a[j];
  }
  std::vector<std::vector<double>> basis;  // normals first, then tangents
  auto add = [&](std::vector<double> v) {
    for (const auto& w : basis) {
      const double p = dot(v, w);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= p * w[i];
    }
    const double nv = norm(v);
    if (nv < 1e-8) return false;
    for (auto& x : v) x /= nv;
    basis.push_back(std::move(v));
    return true;
  };
  add(normals[0]);
  add(normals[1]);
  std::vector<std::vector<double>> tangents;
  for (size_t k = 0; k < 2 * m && tangents.size() < 2 * m - 2; ++k) {
    std::vector<double> e(2 * m, 0.0);
    e[k] = 1.0;
    if (add(e)) tangents.push_back(basis.back());
  }
  return tangents;
}

double omega_std(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t m = x.size() / 2;
  double s = 0;  // sum da_j ^ db_j
  for (size_t j = 0; j < m; ++j) s += x[j] * y[m + j] - x[m + j] * y[j];
  return s;
}

double omega_cotangent(const CotangentPoint& x, const CotangentPoint& y) {
  double s = 0;  // sum dv_j ^ du_j (the sign matching the coordinate map)
  for (size_t j = 0; j < x.u.size(); ++j) s += x.v[j] * y.u[j] - x.u[j] * y.v[j];
  return s;
}

}  // namespace

double symplectic_pullback_residual(const std::vector<CPoint>& samples, double t,
                                    double fd_step) {
  if (fd_step <= 0) throw std::invalid_argument("symplectic_pullback_residual: bad step");
  double worst = 0;
  for (const auto& z : samples) {
    require_on_quadric(z, t);
    const auto tangents = quadric_tangent_basis(z);
    const auto x0 = flatten(z);
    const size_t dim = x0.size();
    // finite-difference pushforwards of the tangent basis
    std::vector<CotangentPoint> images;
    images.reserve(tangents.size());
    for (const auto& dir : tangents) {
      std::vector<double> xp = x0, xm = x0;
      for (size_t i = 0; i < dim; ++i) {
        xp[i] += fd_step * dir[i];
        xm[i] -= fd_step * dir[i];
      }
      const CotangentPoint pp = raw_map(unflatten(xp));
      const CotangentPoint pm = raw_map(unflatten(xm));
      CotangentPoint d;
      d.u.resize(pp.u.size());
      d.v.resize(pp.v.size());
      for (size_t j = 0; j < pp.u.size(); ++j) {
        d.u[j] = (pp.u[j] - pm.u[j]) / (2 * fd_step);
        d.v[j] = (pp.v[j] - pm.v[j]) / (2 * fd_step);
      }
      images.push_back(std::move(d));
    }
    for (size_t i = 0; i < tangents.size(); ++i)
      for (size_t j = i + 1; j < tangents.size(); ++j) {
        const double lhs = omega_std(tangents[i], tangents[j]);
        const double rhs = omega_cotangent(images[i], images[j]);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  }
  return worst;
}

double packing_inequality_check(const std::vector<CPoint>& samples) {
  double worst = 0;
  for (const auto& z : samples) {
    auto [a, b] = split(z);
    const double nz2 = dot(a, a) + dot(b, b);
    if (nz2 == 0) throw std::invalid_argument("packing_inequality_check: zero sample");
    worst = std::max(worst, norm(a) * norm(b) / nz2);
  }
  return worst;
}

}  // namespace symsurg::local
