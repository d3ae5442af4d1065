#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symsurg/monodromy.hpp"
#include "symsurg/rational.hpp"

namespace symsurg::fibre {

using monodromy::H1Class;

/// Critical values of a fibred surface, with the vanishing cycles collapsing
/// over each base position (positions are abstract integer labels).
struct FibrationSketch {
  std::string name;
  struct CriticalPoint {
    int position;
    std::vector<H1Class> cycles;
  };
  std::vector<CriticalPoint> critical_points;

  void validate() const;  // positions distinct
  std::vector<H1Class> flattened_cycles() const;
};

/// Quasi-homogeneous weights, each in (0, 1).
struct WeightVector {
  std::vector<Rational> weights;
};

/// Vertices are (cycle index in sketch 1, cycle index in sketch 2); edges
/// carry non-negative multiplicities under a registered intersection rule.
struct SphereGraph {
  std::vector<std::pair<int, int>> vertices;
  std::map<std::pair<int, int>, int> edges;  // key: (vertex index, vertex index), i < j
  std::string rule_id;

  nlohmann::json to_json() const;
};

/// Number of fibre-product nodes: over every shared critical position,
/// (#cycles in f1) * (#cycles in f2).
int count_fibre_product_nodes(const FibrationSketch& f1, const FibrationSketch& f2);

/// Milnor number of a quasi-homogeneous singularity: prod(1/w_i - 1).
/// Must come out integral.
long milnor_number(const WeightVector& w);

/// Cartesian product of the flattened cycle lists.
std::vector<std::pair<int, int>> enumerate_fibred_spheres(const FibrationSketch& f1,
                                                          const FibrationSketch& f2);

/// Absolute torus intersection number |p q' - q p'|.
long fibre_intersection(const H1Class& c, const H1Class& d);

std::vector<std::string> registered_rules();

/// Builds the sphere graph under a registered rule. The default rule
/// "matching-calculus" multiplies factorwise fibre intersections, with a
/// shared factor cycle contributing via the other factor alone; the
/// alternative "shared-endpoint-zero" gives spheres sharing a factor cycle
/// multiplicity 0.
SphereGraph intersection_graph(const FibrationSketch& f1, const FibrationSketch& f2,
                               const std::string& rule = "matching-calculus");

/// For a 16-vertex triple-point graph: invariance under the S3 x S3 action
/// permuting cycles 1,2,3 independently in each factor (fixing the fourth
/// cycle) and under swapping the two factors.
bool graph_symmetry_check(const SphereGraph& g);

nlohmann::json sketch_to_json(const FibrationSketch& f);
FibrationSketch sketch_from_json(const nlohmann::json& j);

}  // namespace symsurg::fibre
