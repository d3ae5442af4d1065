#include "symsurg/reports.hpp"

#include <sstream>

#include "symsurg/local_models.hpp"

namespace symsurg::reports {

using profile::CohomologyClass;
using profile::InvariantProfile;

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : verdicts)
    vs.push_back({{"test", v.test}, {"outcome", profile::to_string(v.outcome)},
                  {"details", v.details}});
  j["verdicts"] = vs;
  j["exit_code"] = exit_code;
  return j;
}

std::string Report::human() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  if (!results.empty()) out << "results: " << results.dump() << "\n";
  for (const auto& v : verdicts) {
    out << "  [" << profile::to_string(v.outcome) << "] " << v.test;
    if (!v.details.empty()) out << " — " << v.details;
    out << "\n";
  }
  out << "exit: " << exit_code << "\n";
  return out.str();
}

void Report::finalize() {
  if (exit_code == 2) return;
  exit_code = 0;
  for (const auto& v : verdicts)
    if (v.outcome == TestOutcome::Fail) exit_code = 1;
}

Report cmd_profile_check(const InvariantProfile& p,
                         const std::optional<CohomologyClass>& omega_override,
                         const profile::MoriMukaiTable* fano_table) {
  Report r;
  r.command = "profile-check";
  r.inputs = profile::to_json(p);
  std::optional<CohomologyClass> w = omega_override ? omega_override : p.omega;
  if (omega_override) {
    nlohmann::json ov = nlohmann::json::array();
    for (const auto& c : omega_override->coords) ov.push_back(c.str());
    r.inputs["omega_override"] = ov;
  }

  if (w) {
    r.verdicts.push_back({"hard_lefschetz", profile::hard_lefschetz_test(p, *w),
                          "pairing A.B.PD[w] on H_4 must be non-degenerate"});
    r.verdicts.push_back({"hodge_riemann_signature",
                          profile::hodge_riemann_signature_test(p, *w),
                          "signature must be (1+2*h20, h11-1)"});
    r.verdicts.push_back({"det_positivity_b2_3", profile::det_positivity_b2_3(p, *w),
                          "b2=3: det(cap [w]) > 0 with an odd positive count"});
  } else {
    r.verdicts.push_back({"hard_lefschetz", TestOutcome::Skipped, "no symplectic class given"});
    r.verdicts.push_back({"hodge_riemann_signature", TestOutcome::Skipped, "no symplectic class given"});
    r.verdicts.push_back({"det_positivity_b2_3", TestOutcome::Skipped, "no symplectic class given"});
  }
  if (p.has_unknown_products())
    r.verdicts.push_back({"triple_products_known", TestOutcome::Skipped,
                          "skipped: unknown products from a prior surgery"});

  r.results["rigid_cy"] = profile::rigid_cy_check(p);
  if (p.b3 == 0)
    r.results["note_b3_zero"] =
        "b3 = 0: cannot be a Kahler Calabi-Yau (holomorphic volume class nonzero)";
  const Rational c13 = profile::c1_cubed(p);
  r.results["c1_cubed"] = c13.str();
  if (fano_table && c13.is_integer()) {
    const bool found = fano_table->contains(p.b2, c13.num().get_si());
    r.results["mori_mukai"] = found ? "found" : "absent";
  }
  r.finalize();
  return r;
}

Report cmd_surgery(const InvariantProfile& p, const std::string& kind,
                   const SurgeryParams& params) {
  Report r;
  r.command = "surgery";
  r.inputs = {{"profile", profile::to_json(p)}, {"kind", kind},
              {"n", params.n}, {"r", params.r}, {"a", params.a.str()}};
  std::pair<InvariantProfile, surgery::SurgeryRecord> out{p, {}};
  if (kind == "conifold") {
    out = surgery::conifold_transition(p, params.n, params.r);
  } else if (kind == "odp-blowup") {
    out = surgery::odp_full_blowup(p, params.r, params.a);
  } else if (kind == "triple-point") {
    out = surgery::triple_point_transition(p, params.r);
  } else {
    r.exit_code = 2;
    r.results["error"] = "unknown surgery kind: " + kind;
    return r;
  }
  r.results["profile"] = profile::to_json(out.first);
  r.results["record"] = out.second.to_json();
  r.results["euler_char"] = surgery::euler_char(out.first);
  r.verdicts.push_back({"surgery_valid",
                        out.second.valid ? TestOutcome::Pass : TestOutcome::Fail,
                        out.second.notes.empty() ? "" : out.second.notes.front()});
  r.finalize();
  return r;
}

Report cmd_an_chain(int n) {
  Report r;
  r.command = "an-chain";
  r.inputs = {{"n", n}};
  r.results["link"] = surgery::to_string(surgery::an_chain_link(n));
  const bool small = surgery::an_small_resolution_exists(n);
  r.results["small_resolution"] = small;
  if (small)
    // n = 2k+1; the thickening count k is reported symbolically
    r.results["exceptional_locus"] = "k-times thickened P1 with n = 2k+1";
  r.finalize();
  return r;
}

Report cmd_monodromy(const monodromy::TwistWord& w) {
  Report r;
  r.command = "monodromy";
  r.inputs = monodromy::word_to_json(w);
  const auto rep = monodromy::validate_fibration(w);
  r.results["product"] = monodromy::matrix_to_json(monodromy::word_product(w));
  r.results["closed"] = rep.closed;
  r.results["euler"] = rep.euler;
  nlohmann::json gens = nlohmann::json::array();
  std::vector<monodromy::H1Class> seen;
  for (const auto& l : w) {
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == l.cls;
    if (dup) continue;
    seen.push_back(l.cls);
    gens.push_back({{"p", l.cls.p}, {"q", l.cls.q},
                    {"matrix", monodromy::matrix_to_json(monodromy::dehn_twist(l.cls))}});
  }
  r.results["generators"] = gens;
  r.verdicts.push_back({"closed_monodromy", rep.closed ? TestOutcome::Pass : TestOutcome::Fail,
                        "word product must be the identity"});
  r.finalize();
  return r;
}

Report cmd_fibre_product(const fibre::FibrationSketch& f1, const fibre::FibrationSketch& f2,
                         const std::string& rule) {
  Report r;
  r.command = "fibre-product";
  r.inputs = {{"f1", fibre::sketch_to_json(f1)}, {"f2", fibre::sketch_to_json(f2)},
              {"rule", rule}};
  r.results["nodes"] = fibre::count_fibre_product_nodes(f1, f2);
  const auto g = fibre::intersection_graph(f1, f2, rule);
  r.results["graph"] = g.to_json();
  r.results["sphere_count"] = g.vertices.size();
  if (g.vertices.size() == 16)
    r.verdicts.push_back({"s3xs3_symmetry",
                          fibre::graph_symmetry_check(g) ? TestOutcome::Pass : TestOutcome::Fail,
                          "graph invariant under S3 x S3 and factor swap"});
  r.finalize();
  return r;
}

Report cmd_local_models(std::uint64_t seed, int samples) {
  Report r;
  r.command = "local-models";
  r.inputs = {{"seed", seed}, {"samples", samples}, {"n", 3}};
  const int n = 3;
  const double step = 1e-5;
  const auto on_w = local::sample_quadric(n, 0.0, samples, seed);
  const auto on_smoothing = local::sample_quadric(n, 1.0, samples, seed + 1);

  const double res0 = local::symplectic_pullback_residual(on_w, 0.0, step);
  const double res1 = local::symplectic_pullback_residual(on_smoothing, 1.0, step);
  double round_trip = 0, packing = local::packing_inequality_check(on_w);
  for (double t : {0.0, 1.0})
    for (const auto& z : (t == 0.0 ? on_w : on_smoothing)) {
      const auto back = local::cotangent_to_node(local::node_to_cotangent(z, t), t);
      for (size_t j = 0; j < z.size(); ++j)
        round_trip = std::max(round_trip, std::abs(back[j] - z[j]));
    }

  r.results["max_residual_t0"] = res0;
  r.results["max_residual_t1"] = res1;
  r.results["max_round_trip_error"] = round_trip;
  r.results["max_packing_ratio"] = packing;
  r.results["tolerances"] = {{"residual", 1e-6}, {"round_trip", 1e-9},
                             {"packing", 0.5 + 1e-12}, {"fd_step", step}};
  r.verdicts.push_back({"symplectic_residual",
                        (res0 <= 1e-6 && res1 <= 1e-6) ? TestOutcome::Pass : TestOutcome::Fail,
                        "finite-difference pullback discrepancy <= 1e-6"});
  r.verdicts.push_back({"round_trip",
                        round_trip <= 1e-9 ? TestOutcome::Pass : TestOutcome::Fail,
                        "node <-> cotangent round trip <= 1e-9"});
  r.verdicts.push_back({"packing_ratio",
                        packing <= 0.5 + 1e-12 ? TestOutcome::Pass : TestOutcome::Fail,
                        "|Re z||Im z| / |z|^2 <= 1/2"});
  r.finalize();
  return r;
}

Report cmd_fano_lookup(int b2, long c1cubed, const profile::MoriMukaiTable& table) {
  Report r;
  r.command = "fano-lookup";
  r.inputs = {{"b2", b2}, {"c1cubed", c1cubed}};
  r.results["status"] = table.contains(b2, c1cubed) ? "found" : "absent";
  r.finalize();
  return r;
}

}  // namespace symsurg::reports
