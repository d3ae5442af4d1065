#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symsurg/lattice.hpp"

#include "json.hpp"

namespace symsurg::profile {

using lattice::RatMatrix;
using lattice::SymTensor3;
using lattice::UniPoly;

enum class TestOutcome { Pass, Fail, Skipped };
std::string to_string(TestOutcome t);

/// An H^2 class stored in H_4 coordinates via Poincare duality.
struct CohomologyClass {
  std::string basis_id;
  std::vector<Rational> coords;

  bool is_zero() const;
};

/// Cohomological data of a closed oriented 6-manifold: Betti numbers, the
/// H_4 triple-product tensor, first Chern class and (optionally) a
/// symplectic class and Hodge numbers.
struct InvariantProfile {
  std::string name;
  int b1 = 0, b2 = 0, b3 = 0;
  std::vector<std::string> h4_basis;  // length b2
  SymTensor3 triple{1};
  CohomologyClass c1;
  std::optional<CohomologyClass> omega;
  std::optional<int> h20, h11;
  /// Triple products not derivable after a surgery; their presence poisons
  /// tests that would read them ("skipped: unknown products").
  std::set<std::array<int, 3>> unknown_triples;

  void validate() const;
  bool has_unknown_products() const { return !unknown_triples.empty(); }
};

struct KahlerVerdict {
  TestOutcome hard_lefschetz = TestOutcome::Skipped;
  TestOutcome signature_test = TestOutcome::Skipped;
  TestOutcome det_positivity = TestOutcome::Skipped;
  bool rigid_cy = false;
  std::vector<std::string> notes;
};

/// Pass iff the pairing (A,B) -> A.B.PD[w] on H_4 is non-degenerate.
TestOutcome hard_lefschetz_test(const InvariantProfile& p, const CohomologyClass& w);

/// Pass iff that pairing has signature (1+2*h20, h11-1, 0); skipped when
/// the Hodge numbers are absent.
TestOutcome hodge_riemann_signature_test(const InvariantProfile& p, const CohomologyClass& w);

/// b2=3 specialisation: determinant positive with an odd number of positive
/// eigenvalues. Skipped unless b2 = 3.
TestOutcome det_positivity_b2_3(const InvariantProfile& p, const CohomologyClass& w);

Rational c1_cubed(const InvariantProfile& p);

bool rigid_cy_check(const InvariantProfile& p);

/// "obstructed" iff the profile is a rigid CY and the sphere class is
/// essential; an essential Lagrangian sphere in a rigid CY is never a
/// vanishing cycle.
std::string vanishing_cycle_obstruction(const InvariantProfile& p, bool sphere_class_essential);

enum class Sign : int { Plus = +1, Minus = -1 };

/// The b2=3 conifold-transition profile of P^2 x P^1 in the ordered basis
/// (|P^2|, |P^1xP^1|, |R|), with the class alpha*|P^2| - beta*|P^1xP^1|
/// +/- eps*|R|. A is the undetermined +/-1 triple product |P^2|^2.|R| and
/// B the free integer |R|^3.
std::pair<InvariantProfile, CohomologyClass> salvage_profile(
    const Rational& alpha, const Rational& beta, const Rational& eps,
    int A, long B, Sign sign);

/// The same pairing matrix with eps left symbolic, for exact order-eps
/// analysis of the determinant.
lattice::PolyMatrix salvage_pairing_poly(const Rational& alpha, const Rational& beta,
                                         int A, long B, Sign sign);

/// Membership in the shipped Fano 3-fold classification table.
class MoriMukaiTable {
 public:
  static MoriMukaiTable load(const std::string& path);
  bool contains(int b2, long c1cubed) const;
  size_t size() const { return rows_.size(); }

 private:
  struct Row { int b2; long c1cubed; std::string label; };
  std::vector<Row> rows_;
};

nlohmann::json to_json(const InvariantProfile& p);
InvariantProfile profile_from_json(const nlohmann::json& j);

}  // namespace symsurg::profile
