#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symsurg/fibre_products.hpp"
#include "symsurg/monodromy.hpp"
#include "symsurg/profile.hpp"
#include "symsurg/surgery.hpp"

namespace symsurg::reports {

using profile::TestOutcome;

struct Verdict {
  std::string test;
  TestOutcome outcome;
  std::string details;
};

struct Report {
  std::string command;
  nlohmann::json inputs;
  nlohmann::json results;
  std::vector<Verdict> verdicts;
  int exit_code = 0;  // 0 all pass, 1 a verdict failed, 2 input error

  nlohmann::json to_json() const;
  std::string human() const;
  void finalize();  // derives exit_code from verdicts unless already 2
};

/// Runs the Kahler-obstruction battery on a profile: Hard Lefschetz,
/// Hodge-Riemann signature, b2=3 determinant positivity, rigidity, c1^3
/// and the Fano classification lookup.
Report cmd_profile_check(const profile::InvariantProfile& p,
                         const std::optional<profile::CohomologyClass>& omega_override,
                         const profile::MoriMukaiTable* fano_table);

struct SurgeryParams {
  int n = 0;
  int r = 0;
  Rational a = Rational(1);
};

Report cmd_surgery(const profile::InvariantProfile& p, const std::string& kind,
                   const SurgeryParams& params);

/// an-chain query: link type and small-resolution existence.
Report cmd_an_chain(int n);

Report cmd_monodromy(const monodromy::TwistWord& w);

Report cmd_fibre_product(const fibre::FibrationSketch& f1, const fibre::FibrationSketch& f2,
                         const std::string& rule);

Report cmd_local_models(std::uint64_t seed, int samples);

Report cmd_fano_lookup(int b2, long c1cubed, const profile::MoriMukaiTable& table);

}  // namespace symsurg::reports
