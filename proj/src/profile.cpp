#include "symsurg/profile.hpp"

#include <algorithm>
#include <fstream>

namespace symsurg::profile {

using lattice::contract;
using lattice::det;
using lattice::PolyMatrix;
using lattice::Signature;

std::string to_string(TestOutcome t) {
  switch (t) {
    case TestOutcome::Pass: return "pass";
    case TestOutcome::Fail: return "fail";
    default: return "skipped";
  }
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

void InvariantProfile::validate() const {
  if (b1 < 0 || b2 < 0 || b3 < 0)
    throw std::invalid_argument("profile: negative Betti number");
  if (static_cast<int>(h4_basis.size()) != b2)
    throw std::invalid_argument("profile: h4_basis length != b2");
  if (triple.dim() != b2) throw std::invalid_argument("profile: triple.dim != b2");
  if (static_cast<int>(c1.coords.size()) != b2)
    throw std::invalid_argument("profile: c1 coordinate length != b2");
  if (omega && static_cast<int>(omega->coords.size()) != b2)
    throw std::invalid_argument("profile: omega coordinate length != b2");
  if (h11 && *h11 > b2) throw std::invalid_argument("profile: h11 > b2");
}

namespace {
void check_dim(const InvariantProfile& p, const CohomologyClass& w) {
  if (static_cast<int>(w.coords.size()) != p.b2)
    throw std::invalid_argument("class dimension does not match profile b2");
}
}  // namespace

TestOutcome hard_lefschetz_test(const InvariantProfile& p, const CohomologyClass& w) {
  check_dim(p, w);
  if (p.has_unknown_products()) return TestOutcome::Skipped;
  return det(contract(p.triple, w.coords)).is_zero() ? TestOutcome::Fail : TestOutcome::Pass;
}

TestOutcome hodge_riemann_signature_test(const InvariantProfile& p, const CohomologyClass& w) {
  check_dim(p, w);
  if (!p.h20 || !p.h11) return TestOutcome::Skipped;
  if (p.has_unknown_products()) return TestOutcome::Skipped;
  Signature s = lattice::signature(contract(p.triple, w.coords));
  Signature want{1 + 2 * *p.h20, *p.h11 - 1, 0};
  return s == want ? TestOutcome::Pass : TestOutcome::Fail;
}

TestOutcome det_positivity_b2_3(const InvariantProfile& p, const CohomologyClass& w) {
  check_dim(p, w);
  if (p.b2 != 3) return TestOutcome::Skipped;
  if (p.has_unknown_products()) return TestOutcome::Skipped;
  RatMatrix m = contract(p.triple, w.coords);
  if (det(m) <= Rational(0)) return TestOutcome::Fail;
  Signature s = lattice::signature(m);
  return (s.pos % 2 == 1) ? TestOutcome::Pass : TestOutcome::Fail;
}

Rational c1_cubed(const InvariantProfile& p) {
  if (static_cast<int>(p.c1.coords.size()) != p.b2)
    throw std::invalid_argument("c1_cubed: missing or malformed c1");
  Rational acc(0);
  const auto& v = p.c1.coords;
  for (int i = 0; i < p.b2; ++i)
    for (int j = 0; j < p.b2; ++j)
      for (int k = 0; k < p.b2; ++k) acc += p.triple.get(i, j, k) * v[i] * v[j] * v[k];
  return acc;
}

bool rigid_cy_check(const InvariantProfile& p) { return p.b3 == 2; }

std::string vanishing_cycle_obstruction(const InvariantProfile& p, bool sphere_class_essential) {
  if (rigid_cy_check(p) && sphere_class_essential) return "obstructed";
  return "no obstruction from this test";
}

lattice::PolyMatrix salvage_pairing_poly(const Rational& alpha, const Rational& beta,
                                         int A, long B, Sign sign) {
  if (A != 1 && A != -1) throw std::invalid_argument("salvage: A must be +-1");
  const UniPoly eps = UniPoly::variable();
  const UniPoly s = UniPoly::constant(Rational(static_cast<int>(sign)));
  const UniPoly a = UniPoly::constant(alpha);
  const UniPoly b = UniPoly::constant(beta);
  const UniPoly aA = UniPoly::constant(alpha * Rational(A));
  const UniPoly zero;
  // [[ +-eps*A,   -beta,        alpha*A -+ eps ],
  //  [ -beta,      alpha,       0              ],
  //  [ alpha*A -+ eps, 0,       -alpha +- B*eps ]]
  PolyMatrix m(3, std::vector<UniPoly>(3));
  m[0][0] = s * eps * UniPoly::constant(Rational(A));
  m[0][1] = -b;
  m[0][2] = aA - s * eps;
  m[1][0] = -b;
  m[1][1] = a;
  m[1][2] = zero;
  m[2][0] = aA - s * eps;
  m[2][1] = zero;
  m[2][2] = -a + s * eps * UniPoly::constant(Rational(B));
  return m;
}

std::pair<InvariantProfile, CohomologyClass> salvage_profile(
    const Rational& alpha, const Rational& beta, const Rational& eps,
    int A, long B, Sign sign) {
  if (alpha <= Rational(0) || beta <= Rational(0))
    throw std::invalid_argument("salvage: alpha, beta must be positive");
  if (eps < Rational(0)) throw std::invalid_argument("salvage: eps must be >= 0");
  if (A != 1 && A != -1) throw std::invalid_argument("salvage: A must be +-1");

  InvariantProfile p;
  p.name = "p2xp1_conifold_salvage";
  p.b1 = 0;
  p.b2 = 3;
  p.b3 = 0;
  p.h4_basis = {"|P2|", "|P1xP1|", "|R|"};
  SymTensor3 t(3);
  // |P2|^3 = 0 (trivial Euler class), |P1xP1|^2.|P2| = 1, |P1xP1|.|P2|^2 = 0,
  // |P1xP1|.|R|^2 = |P1xP1|^2.|R| = 0, |R|^2.|P2| = -1, |P2|^2.|R| = A, |R|^3 = B.
  t.set(1, 1, 0, 1);
  t.set(2, 2, 0, -1);
  t.set(0, 0, 2, Rational(A));
  t.set(2, 2, 2, Rational(B));
  p.triple = t;
  p.c1.basis_id = p.name;
  p.c1.coords = {Rational(0), Rational(0), Rational(0)};  // c1 data not part of this model

  CohomologyClass w;
  w.basis_id = p.name;
  const Rational se = Rational(static_cast<int>(sign)) * eps;
  w.coords = {alpha, -beta, se};
  p.omega = w;
  p.validate();
  return {p, w};
}

MoriMukaiTable MoriMukaiTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Mori-Mukai table not found: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array() || j.empty())
    throw std::runtime_error("Mori-Mukai table malformed or empty: " + path);
  MoriMukaiTable t;
  for (const auto& row : j) {
    t.rows_.push_back({row.at("b2").get<int>(), row.at("c1cubed").get<long>(),
                       row.value("label", std::string{})});
  }
  return t;
}

bool MoriMukaiTable::contains(int b2, long c1cubed) const {
  if (b2 < 1) throw std::invalid_argument("mori_mukai_lookup: b2 must be >= 1");
  return std::any_of(rows_.begin(), rows_.end(), [&](const Row& r) {
    return r.b2 == b2 && r.c1cubed == c1cubed;
  });
}

namespace {
nlohmann::json coords_to_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}
std::vector<Rational> coords_from_json(const nlohmann::json& a) {
  std::vector<Rational> v;
  for (const auto& s : a) v.push_back(Rational::parse(s.get<std::string>()));
  return v;
}
}  // namespace

nlohmann::json to_json(const InvariantProfile& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["b1"] = p.b1;
  j["b2"] = p.b2;
  j["b3"] = p.b3;
  j["h4_basis"] = p.h4_basis;
  nlohmann::json trip = nlohmann::json::array();
  for (const auto& [idx, v] : p.triple.entries())
    trip.push_back({{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"v", v.str()}});
  j["triple"] = trip;
  j["c1"] = coords_to_json(p.c1.coords);
  if (p.omega) j["omega"] = coords_to_json(p.omega->coords);
  if (p.h20) j["h20"] = *p.h20;
  if (p.h11) j["h11"] = *p.h11;
  if (!p.unknown_triples.empty()) {
    nlohmann::json u = nlohmann::json::array();
    for (const auto& idx : p.unknown_triples) u.push_back({idx[0], idx[1], idx[2]});
    j["unknown_triples"] = u;
  }
  return j;
}

InvariantProfile profile_from_json(const nlohmann::json& j) {
  InvariantProfile p;
  p.name = j.value("name", std::string{});
  p.b1 = j.at("b1").get<int>();
  p.b2 = j.at("b2").get<int>();
  p.b3 = j.at("b3").get<int>();
  p.h4_basis = j.at("h4_basis").get<std::vector<std::string>>();
  SymTensor3 t(p.b2 > 0 ? p.b2 : 1);
  for (const auto& e : j.at("triple"))
    t.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
          Rational::parse(e.at("v").get<std::string>()));
  p.triple = t;
  p.c1.basis_id = p.name;
  p.c1.coords = coords_from_json(j.at("c1"));
  if (j.contains("omega")) {
    CohomologyClass w;
    w.basis_id = p.name;
    w.coords = coords_from_json(j.at("omega"));
    p.omega = w;
  }
  if (j.contains("h20")) p.h20 = j.at("h20").get<int>();
  if (j.contains("h11")) p.h11 = j.at("h11").get<int>();
  if (j.contains("unknown_triples"))
    for (const auto& u : j.at("unknown_triples")) {
      std::array<int, 3> idx{u.at(0).get<int>(), u.at(1).get<int>(), u.at(2).get<int>()};
      std::sort(idx.begin(), idx.end());
      p.unknown_triples.insert(idx);
    }
  p.validate();
  return p;
}

}  // namespace symsurg::profile
