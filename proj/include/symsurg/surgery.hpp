#pragma once

#include <map>
#include <string>
#include <vector>

#include "symsurg/profile.hpp"

namespace symsurg::surgery {

using profile::CohomologyClass;
using profile::InvariantProfile;

/// Labelled Lagrangian-sphere graph: H_3 classes (one row per sphere in a
/// chosen basis) and geometric intersection counts.
struct SphereConfiguration {
  std::vector<std::string> sphere_ids;
  std::vector<std::vector<long>> h3_classes;       // rows = spheres
  std::vector<std::vector<int>> adjacency;         // symmetric, zero diagonal

  void validate() const;
  size_t size() const { return sphere_ids.size(); }
};

enum class SurgeryKind { OdpFullBlowup, ConifoldTransition, TriplePointTransition, AnChain };
std::string to_string(SurgeryKind k);

struct SurgeryRecord {
  SurgeryKind kind;
  std::map<std::string, std::string> params;
  int delta_b2 = 0, delta_b3 = 0, delta_chi = 0;
  bool valid = true;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// True iff sum lambda_i * [L_i] = 0 in H_3; all lambda_i must be nonzero.
bool relation_check(const SphereConfiguration& cfg, const std::vector<long>& lambdas);

/// Conifold transition in n disjoint Lagrangian spheres whose classes span
/// rank r: b2 += n-r, b3 -= 2r, chi += 2n. New triple products are unknown.
std::pair<InvariantProfile, SurgeryRecord> conifold_transition(const InvariantProfile& p,
                                                               int n, int r);

/// Full blow-up of the node obtained by collapsing one Lagrangian sphere of
/// class rank r in {0,1}. Appends the exceptional-divisor class [E] (and for
/// r=0 the lifted 4-chain class); c1(Y) = c1(X) - [E]; the symplectic class
/// becomes [w] - a[E] with a the pi-normalized line area (a = pi*lambda^2).
std::pair<InvariantProfile, SurgeryRecord> odp_full_blowup(const InvariantProfile& p, int r,
                                                           const Rational& a = Rational(1));

/// Triple-point transition: chi += 24, b3 -= 2r, b2 += 12 - r; preserves c1.
std::pair<InvariantProfile, SurgeryRecord> triple_point_transition(const InvariantProfile& p,
                                                                   int r);

enum class LinkType { S5, S2xS3 };
std::string to_string(LinkType t);

/// Link of an A_n chain of Lagrangian 3-spheres: S^5 for even n, S^2xS^3 for odd.
LinkType an_chain_link(int n);

/// A_n 3-fold singularity has a small resolution iff n = 2k+1 is odd.
bool an_small_resolution_exists(int n);

/// Degree-d surface surgery data: contracted curve genus (d-1)(d-2)/2, square -d.
std::pair<int, int> degree_d_surface_surgery(int d);

/// Hopf-graph Lagrangian sphere in (P^2 x P^1, beta w_P2 + alpha w_P1)
/// exists precisely when beta > alpha.
bool hopf_lagrangian_exists(const Rational& alpha, const Rational& beta);

/// |z|^2 <= R forces |v| = |Re z||Im z| <= R/2: ball of squared radius r2
/// lands inside the disc bundle of radius r2/2 (pi-normalized units).
Rational ball_to_disc_bundle(const Rational& r2);

/// Fano surgery needs the mu-disc bundle for some mu > 1/2pi; in units
/// mu_hat = 2*pi*mu the criterion is mu_hat > 1, strictly.
bool fano_surgery_criterion(const Rational& mu_hat);

/// True iff the intersection multigraph is a tree (acyclic; multiplicity
/// >= 2 between two spheres already counts as a loop).
bool tree_uniqueness_applicable(const SphereConfiguration& cfg);

/// chi = 2 - 2 b1 + 2 b2 - b3 (Poincare duality for closed oriented 6-manifolds).
long euler_char(const InvariantProfile& p);

}  // namespace symsurg::surgery
