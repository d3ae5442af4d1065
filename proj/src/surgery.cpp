#include "symsurg/surgery.hpp"

#include <algorithm>
#include <functional>

namespace symsurg::surgery {

void SphereConfiguration::validate() const {
  const size_t n = sphere_ids.size();
  if (h3_classes.size() != n)
    throw std::invalid_argument("SphereConfiguration: h3_classes row count != sphere count");
  if (adjacency.size() != n)
    throw std::invalid_argument("SphereConfiguration: adjacency size != sphere count");
  for (size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n)
      throw std::invalid_argument("SphereConfiguration: adjacency not square");
    if (adjacency[i][i] != 0)
      throw std::invalid_argument("SphereConfiguration: adjacency diagonal nonzero");
    for (size_t j = 0; j < n; ++j) {
      if (adjacency[i][j] < 0)
        throw std::invalid_argument("SphereConfiguration: negative intersection count");
      if (adjacency[i][j] != adjacency[j][i])
        throw std::invalid_argument("SphereConfiguration: adjacency asymmetric");
    }
  }
}

std::string to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::OdpFullBlowup: return "odp_full_blowup";
    case SurgeryKind::ConifoldTransition: return "conifold_transition";
    case SurgeryKind::TriplePointTransition: return "triple_point_transition";
    default: return "an_chain";
  }
}

std::string to_string(LinkType t) { return t == LinkType::S5 ? "S5" : "S2xS3"; }

nlohmann::json SurgeryRecord::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["params"] = params;
  j["delta_b2"] = delta_b2;
  j["delta_b3"] = delta_b3;
  j["delta_chi"] = delta_chi;
  j["valid"] = valid;
  j["notes"] = notes;
  return j;
}

bool relation_check(const SphereConfiguration& cfg, const std::vector<long>& lambdas) {
  cfg.validate();
  if (lambdas.size() != cfg.size())
    throw std::invalid_argument("relation_check: lambda count != sphere count");
  for (long l : lambdas)
    if (l == 0) throw std::invalid_argument("relation_check: zero lambda rejected");
  if (cfg.h3_classes.empty()) return true;
  const size_t dim = cfg.h3_classes[0].size();
  for (size_t c = 0; c < dim; ++c) {
    long long acc = 0;
    for (size_t i = 0; i < cfg.size(); ++i) {
      if (cfg.h3_classes[i].size() != dim)
        throw std::invalid_argument("relation_check: ragged h3_classes");
      acc += static_cast<long long>(lambdas[i]) * cfg.h3_classes[i][c];
    }
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Appends new basis classes; old triple entries are kept and every new
// triple product is recorded as unknown (not derivable from Betti-number
// bookkeeping in general).
void append_classes(InvariantProfile& p, const std::vector<std::string>& labels) {
  const int old = p.b2;
  const int nb2 = old + static_cast<int>(labels.size());
  p.triple = p.triple.extended(nb2);
  for (const auto& l : labels) p.h4_basis.push_back(l);
  for (int i = 0; i < nb2; ++i)
    for (int j = i; j < nb2; ++j)
      for (int k = j; k < nb2; ++k)
        if (k >= old) p.unknown_triples.insert({i, j, k});
  p.c1.coords.resize(nb2, Rational(0));
  if (p.omega) p.omega->coords.resize(nb2, Rational(0));
  p.b2 = nb2;
}

void require_betti(const InvariantProfile& q) {
  if (q.b2 < 0 || q.b3 < 0)
    throw std::invalid_argument("surgery produced a negative Betti number");
}

}  // namespace

std::pair<InvariantProfile, SurgeryRecord> conifold_transition(const InvariantProfile& p,
                                                               int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw std::invalid_argument("conifold_transition: need 0 <= r <= n");
  if (2 * r > p.b3)
    throw std::invalid_argument("conifold_transition: 2r exceeds b3");
  InvariantProfile q = p;
  q.name = p.name + "+conifold";
  std::vector<std::string> labels;
  for (int i = 0; i < n - r; ++i) labels.push_back("conifold_P1_" + std::to_string(i));
  append_classes(q, labels);
  q.b3 -= 2 * r;
  require_betti(q);

  SurgeryRecord rec;
  rec.kind = SurgeryKind::ConifoldTransition;
  rec.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  rec.delta_b2 = n - r;
  rec.delta_b3 = -2 * r;
  rec.delta_chi = 2 * n;
  if (r == n && n > 0) {
    rec.valid = false;
    rec.notes.push_back("no homology relation — Theorem hypothesis fails");
  }
  if (n > r) rec.notes.push_back("new triple products unknown");
  return {q, rec};
}

std::pair<InvariantProfile, SurgeryRecord> odp_full_blowup(const InvariantProfile& p, int r,
                                                           const Rational& a) {
  if (r != 0 && r != 1)
    throw std::invalid_argument("odp_full_blowup: r must be 0 or 1");
  if (2 * r > p.b3) throw std::invalid_argument("odp_full_blowup: 2r exceeds b3");
  InvariantProfile q = p;
  q.name = p.name + "+blowup";
  // New H_4 classes: the exceptional divisor E, plus the lift of a 4-chain
  // bounded by the Lagrangian (which needs [L] = 0, i.e. r = 0). Two new H_2
  // classes come from the rulings either way, so b2 += 2.
  const int e_index = q.b2;
  std::vector<std::string> labels = {"E"};
  labels.push_back(r == 0 ? "lifted_4chain" : "ruling_class");
  append_classes(q, labels);
  q.b3 -= 2 * r;
  require_betti(q);
  // c1(Y) = c1(X) - [E]; the model symplectic class is [w] - a[E], a = pi*lambda^2.
  q.c1.coords[e_index] = Rational(-1);
  if (q.omega) q.omega->coords[e_index] = -a;

  SurgeryRecord rec;
  rec.kind = SurgeryKind::OdpFullBlowup;
  rec.params = {{"r", std::to_string(r)}, {"a", a.str()}};
  rec.delta_b2 = 2;
  rec.delta_b3 = -2 * r;
  rec.delta_chi = 2 * rec.delta_b2 - rec.delta_b3;
  if (r != 0) rec.notes.push_back("lifted 4-chain class unavailable: sphere class essential");
  return {q, rec};
}

std::pair<InvariantProfile, SurgeryRecord> triple_point_transition(const InvariantProfile& p,
                                                                   int r) {
  if (r < 0 || r > 16)
    throw std::invalid_argument("triple_point_transition: r must be in 0..16 (Milnor number 16)");
  if (2 * r > p.b3) throw std::invalid_argument("triple_point_transition: 2r exceeds b3");
  InvariantProfile q = p;
  q.name = p.name + "+triple_point";
  SurgeryRecord rec;
  rec.kind = SurgeryKind::TriplePointTransition;
  rec.params = {{"r", std::to_string(r)}};
  rec.delta_b2 = 12 - r;
  rec.delta_b3 = -2 * r;
  rec.delta_chi = 24;
  if (r <= 12) {
    std::vector<std::string> labels;
    for (int i = 0; i < 12 - r; ++i) labels.push_back("cubic_divisor_" + std::to_string(i));
    append_classes(q, labels);
    if (r < 12) rec.notes.push_back("new triple products unknown");
  } else {
    // r > 12: the vanishing-cycle relations identify r - 12 of the existing
    // classes with divisor classes; which ones is not determined, so the
    // basis is truncated and the whole product structure becomes unknown.
    q.b2 = p.b2 + 12 - r;
    if (q.b2 < 0) throw std::invalid_argument("surgery produced a negative Betti number");
    q.h4_basis.resize(q.b2);
    q.triple = lattice::SymTensor3(std::max(q.b2, 1));
    q.unknown_triples.clear();
    for (int i = 0; i < q.b2; ++i)
      for (int j = i; j < q.b2; ++j)
        for (int k = j; k < q.b2; ++k) q.unknown_triples.insert({i, j, k});
    q.c1.coords.resize(q.b2);
    if (q.omega) q.omega->coords.resize(q.b2);
    rec.notes.push_back("relations absorb existing classes: all triple products unknown");
  }
  q.b3 -= 2 * r;
  require_betti(q);
  // c1 is preserved (CY to CY): old coordinates unchanged, zero on new classes.
  return {q, rec};
}

LinkType an_chain_link(int n) {
  if (n <= 0) throw std::invalid_argument("an_chain_link: n must be >= 1");
  return (n % 2 == 0) ? LinkType::S5 : LinkType::S2xS3;
}

bool an_small_resolution_exists(int n) {
  if (n <= 0) throw std::invalid_argument("an_small_resolution_exists: n must be >= 1");
  return n % 2 == 1;
}

std::pair<int, int> degree_d_surface_surgery(int d) {
  if (d < 2) throw std::invalid_argument("degree_d_surface_surgery: d must be >= 2");
  return {(d - 1) * (d - 2) / 2, -d};
}

bool hopf_lagrangian_exists(const Rational& alpha, const Rational& beta) {
  if (alpha <= Rational(0) || beta <= Rational(0))
    throw std::invalid_argument("hopf_lagrangian_exists: alpha, beta must be positive");
  return beta > alpha;
}

Rational ball_to_disc_bundle(const Rational& r2) {
  if (r2 < Rational(0)) throw std::invalid_argument("ball_to_disc_bundle: negative radius");
  return r2 / Rational(2);
}

bool fano_surgery_criterion(const Rational& mu_hat) {
  if (mu_hat < Rational(0)) throw std::invalid_argument("fano_surgery_criterion: negative mu");
  return mu_hat > Rational(1);
}

bool tree_uniqueness_applicable(const SphereConfiguration& cfg) {
  cfg.validate();
  const size_t n = cfg.size();
  // The multigraph is a tree iff it is acyclic: no multiplicity >= 2 edge
  // and no simple cycle.
  size_t edges = 0;
  std::vector<int> comp(n, -1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (cfg.adjacency[i][j] >= 2) return false;
      edges += cfg.adjacency[i][j];
    }
  // union-find cycle detection
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (cfg.adjacency[i][j] == 1) {
        size_t a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
      }
  (void)edges;
  return true;
}

long euler_char(const InvariantProfile& p) {
  return 2L - 2L * p.b1 + 2L * p.b2 - p.b3;
}

}  // namespace symsurg::surgery
