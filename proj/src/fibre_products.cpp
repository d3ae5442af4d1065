#include "symsurg/fibre_products.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace symsurg::fibre {

void FibrationSketch::validate() const {
  std::set<int> seen;
  for (const auto& cp : critical_points)
    if (!seen.insert(cp.position).second)
      throw std::invalid_argument("FibrationSketch: duplicate critical position");
}

std::vector<H1Class> FibrationSketch::flattened_cycles() const {
  std::vector<H1Class> out;
  for (const auto& cp : critical_points)
    out.insert(out.end(), cp.cycles.begin(), cp.cycles.end());
  return out;
}

int count_fibre_product_nodes(const FibrationSketch& f1, const FibrationSketch& f2) {
  f1.validate();
  f2.validate();
  int total = 0;
  for (const auto& a : f1.critical_points)
    for (const auto& b : f2.critical_points)
      if (a.position == b.position)
        total += static_cast<int>(a.cycles.size()) * static_cast<int>(b.cycles.size());
  return total;
}

long milnor_number(const WeightVector& w) {
  Rational acc(1);
  for (const auto& wi : w.weights) {
    if (wi <= Rational(0) || wi >= Rational(1))
      throw std::invalid_argument("milnor_number: weight outside (0,1)");
    acc *= Rational(1) / wi - Rational(1);
  }
  if (!acc.is_integer())
    throw std::invalid_argument("milnor_number: product of (1/w_i - 1) is not integral");
  return acc.num().get_si();
}

std::vector<std::pair<int, int>> enumerate_fibred_spheres(const FibrationSketch& f1,
                                                          const FibrationSketch& f2) {
  const auto c1 = f1.flattened_cycles();
  const auto c2 = f2.flattened_cycles();
  if (c1.empty() || c2.empty())
    throw std::invalid_argument("enumerate_fibred_spheres: empty sketch");
  std::vector<std::pair<int, int>> out;
  out.reserve(c1.size() * c2.size());
  for (size_t i = 0; i < c1.size(); ++i)
    for (size_t j = 0; j < c2.size(); ++j) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

long fibre_intersection(const H1Class& c, const H1Class& d) {
  return std::labs(c.p * d.q - c.q * d.p);
}

namespace {

using Rule = long (*)(const H1Class&, const H1Class&, const H1Class&, const H1Class&,
                      bool, bool);

// (c,c') vs (d,d'): factorwise product; when one factor cycle is shared the
// other factor alone decides.
long rule_matching(const H1Class& c, const H1Class& cp, const H1Class& d, const H1Class& dp,
                   bool first_shared, bool second_shared) {
  if (first_shared && second_shared) return 0;  // diagonal
  if (first_shared) return fibre_intersection(cp, dp);
  if (second_shared) return fibre_intersection(c, d);
  return fibre_intersection(c, d) * fibre_intersection(cp, dp);
}

// alternative convention: spheres sharing a critical endpoint do not meet
long rule_shared_zero(const H1Class& c, const H1Class& cp, const H1Class& d, const H1Class& dp,
                      bool first_shared, bool second_shared) {
  if (first_shared || second_shared) return 0;
  return fibre_intersection(c, d) * fibre_intersection(cp, dp);
}

}  // namespace

std::vector<std::string> registered_rules() {
  return {"matching-calculus", "shared-endpoint-zero"};
}

SphereGraph intersection_graph(const FibrationSketch& f1, const FibrationSketch& f2,
                               const std::string& rule) {
  Rule fn = nullptr;
  if (rule == "matching-calculus") fn = rule_matching;
  else if (rule == "shared-endpoint-zero") fn = rule_shared_zero;
  else throw std::invalid_argument("intersection_graph: unknown rule '" + rule + "'");

  const auto c1 = f1.flattened_cycles();
  const auto c2 = f2.flattened_cycles();
  SphereGraph g;
  g.rule_id = rule;
  g.vertices = enumerate_fibred_spheres(f1, f2);
  for (size_t u = 0; u < g.vertices.size(); ++u)
    for (size_t v = u + 1; v < g.vertices.size(); ++v) {
      const auto [i, ip] = g.vertices[u];
      const auto [j, jp] = g.vertices[v];
      long m = fn(c1[i], c2[ip], c1[j], c2[jp], i == j, ip == jp);
      if (m != 0) g.edges[{static_cast<int>(u), static_cast<int>(v)}] = static_cast<int>(m);
    }
  return g;
}

namespace {
int mult(const SphereGraph& g, int u, int v) {
  if (u == v) return 0;
  if (u > v) std::swap(u, v);
  auto it = g.edges.find({u, v});
  return it == g.edges.end() ? 0 : it->second;
}
}  // namespace

bool graph_symmetry_check(const SphereGraph& g) {
  if (g.vertices.size() != 16)
    throw std::invalid_argument("graph_symmetry_check: expected a 16-vertex triple-point graph");
  // vertex (i,j), i,j in 0..3; cycles 0,1,2 are the I_3 nodes, 3 is the
  // transverse cycle. Vertex index = 4*i + j per enumeration order.
  for (size_t v = 0; v < 16; ++v)
    if (g.vertices[v] != std::make_pair(static_cast<int>(v) / 4, static_cast<int>(v) % 4))
      throw std::invalid_argument("graph_symmetry_check: unexpected vertex layout");

  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto act = [](const int* s, int x) { return x < 3 ? s[x] : 3; };
  for (const auto& sig : perms)
    for (const auto& tau : perms)
      for (int swap_factors = 0; swap_factors < 2; ++swap_factors) {
        for (int u = 0; u < 16; ++u)
          for (int v = u + 1; v < 16; ++v) {
            int i = u / 4, ip = u % 4, j = v / 4, jp = v % 4;
            int ni = act(sig, i), nip = act(tau, ip), nj = act(sig, j), njp = act(tau, jp);
            int nu, nv;
            if (swap_factors) {
              nu = 4 * nip + ni;
              nv = 4 * njp + nj;
            } else {
              nu = 4 * ni + nip;
              nv = 4 * nj + njp;
            }
            if (mult(g, u, v) != mult(g, nu, nv)) return false;
          }
      }
  return true;
}

nlohmann::json SphereGraph::to_json() const {
  nlohmann::json j;
  j["rule_id"] = rule_id;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& [a, b] : vertices) vs.push_back({a, b});
  j["vertices"] = vs;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [k, m] : edges) es.push_back({{"u", k.first}, {"v", k.second}, {"m", m}});
  j["edges"] = es;
  return j;
}

nlohmann::json sketch_to_json(const FibrationSketch& f) {
  nlohmann::json j;
  j["name"] = f.name;
  nlohmann::json cps = nlohmann::json::array();
  for (const auto& cp : f.critical_points) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : cp.cycles) cycles.push_back({c.p, c.q});
    cps.push_back({{"position", cp.position}, {"cycles", cycles}});
  }
  j["critical_points"] = cps;
  return j;
}

FibrationSketch sketch_from_json(const nlohmann::json& j) {
  FibrationSketch f;
  f.name = j.value("name", std::string{});
  for (const auto& cp : j.at("critical_points")) {
    FibrationSketch::CriticalPoint c;
    c.position = cp.at("position").get<int>();
    for (const auto& cy : cp.at("cycles"))
      c.cycles.push_back({cy.at(0).get<long>(), cy.at(1).get<long>()});
    f.critical_points.push_back(std::move(c));
  }
  f.validate();
  return f;
}

}  // namespace symsurg::fibre
