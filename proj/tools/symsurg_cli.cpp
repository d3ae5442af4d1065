// Command-line front door: runs the obstruction tests, surgeries and
// verification suites on JSON inputs or named fixtures.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "symsurg/fixtures.hpp"
#include "symsurg/reports.hpp"

namespace {

using namespace symsurg;

profile::InvariantProfile resolve_profile(const std::string& ref) {
  for (const auto& name : fixtures::profile_names())
    if (ref == name) return fixtures::load_profile(name);
  return profile::profile_from_json(fixtures::load_json_file(ref));
}

monodromy::TwistWord resolve_word(const std::string& ref) {
  for (const auto& name : fixtures::word_names())
    if (ref == name) return fixtures::load_word(name);
  return monodromy::word_from_json(fixtures::load_json_file(ref));
}

fibre::FibrationSketch resolve_sketch(const std::string& ref) {
  for (const auto& name : fixtures::sketch_names())
    if (ref == name) return fixtures::load_sketch(name);
  return fibre::sketch_from_json(fixtures::load_json_file(ref));
}

std::optional<profile::CohomologyClass> parse_omega(const std::vector<std::string>& coords) {
  if (coords.empty()) return std::nullopt;
  profile::CohomologyClass w;
  for (const auto& s : coords) w.coords.push_back(Rational::parse(s));
  return w;
}

int emit(const reports::Report& r, bool as_json) {
  if (as_json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.human();
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symsurg — surgery bookkeeping and obstruction tests for 6-manifold profiles"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the full JSON report");

  std::string profile_ref, kind;
  std::vector<std::string> omega;
  int n = 0, r_rank = 0;
  std::string a_str = "1";
  std::string word_ref, f1_ref, f2_ref, rule = "matching-calculus";
  std::uint64_t seed = 1;
  int samples = 100;
  int b2 = 0;
  long c1cubed = 0;

  auto* pc = app.add_subcommand("profile-check", "run the Kahler-obstruction tests");
  pc->add_option("profile", profile_ref, "fixture name or profile JSON path")->required();
  pc->add_option("--omega", omega, "override symplectic class coordinates (rationals)")
      ->delimiter(',');

  auto* sg = app.add_subcommand("surgery", "apply a surgery to a profile");
  sg->add_option("profile", profile_ref, "fixture name or profile JSON path")->required();
  sg->add_option("--kind", kind, "conifold | odp-blowup | triple-point")->required();
  sg->add_option("--n", n, "number of spheres (conifold)");
  sg->add_option("--r", r_rank, "rank of the sphere classes");
  sg->add_option("--a", a_str, "pi-normalized exceptional area for odp-blowup");

  auto* an = app.add_subcommand("an-chain", "A_n chain link type and small resolution");
  an->add_option("--n", n, "chain length")->required();

  auto* mo = app.add_subcommand("monodromy", "validate a Dehn-twist word");
  mo->add_option("word", word_ref, "fixture name or word JSON path")->required();

  auto* fp = app.add_subcommand("fibre-product", "fibre-product node and sphere combinatorics");
  fp->add_option("f1", f1_ref, "first sketch (fixture name or JSON path)")->required();
  fp->add_option("f2", f2_ref, "second sketch (fixture name or JSON path)")->required();
  fp->add_option("--rule", rule, "intersection rule id");

  auto* lm = app.add_subcommand("local-models", "numeric verification of the coordinate maps");
  lm->add_option("--seed", seed, "RNG seed (default 1)");
  lm->add_option("--samples", samples, "sample count per quadric (default 100)");

  auto* fl = app.add_subcommand("fano-lookup", "Fano 3-fold classification membership");
  fl->add_option("--b2", b2, "second Betti number")->required();
  fl->add_option("--c1cubed", c1cubed, "c1^3 value")->required();

  // let --json appear after the subcommand name too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (pc->parsed()) {
      const auto table = fixtures::load_fano_table();
      return emit(reports::cmd_profile_check(resolve_profile(profile_ref),
                                             parse_omega(omega), &table),
                  as_json);
    }
    if (sg->parsed()) {
      reports::SurgeryParams params{n, r_rank, Rational::parse(a_str)};
      return emit(reports::cmd_surgery(resolve_profile(profile_ref), kind, params), as_json);
    }
    if (an->parsed()) return emit(reports::cmd_an_chain(n), as_json);
    if (mo->parsed()) return emit(reports::cmd_monodromy(resolve_word(word_ref)), as_json);
    if (fp->parsed())
      return emit(reports::cmd_fibre_product(resolve_sketch(f1_ref), resolve_sketch(f2_ref), rule),
                  as_json);
    if (lm->parsed()) return emit(reports::cmd_local_models(seed, samples), as_json);
    if (fl->parsed())
      return emit(reports::cmd_fano_lookup(b2, c1cubed, fixtures::load_fano_table()), as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
