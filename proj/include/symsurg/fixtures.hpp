#pragma once

#include <string>
#include <vector>

#include "symsurg/fibre_products.hpp"
#include "symsurg/monodromy.hpp"
#include "symsurg/profile.hpp"

namespace symsurg::fixtures {

/// Directory holding the shipped fixture JSON files; honours the
/// SYMSURG_DATA_DIR environment variable, falling back to the source tree.
std::string data_dir();

std::vector<std::string> profile_names();    // "p2xp1", "quintic"
std::vector<std::string> word_names();       // "e1_four_I3"
std::vector<std::string> sketch_names();     // "e1_sketch", "triple_point_sketch"

profile::InvariantProfile load_profile(const std::string& name);
monodromy::TwistWord load_word(const std::string& name);
fibre::FibrationSketch load_sketch(const std::string& name);
profile::MoriMukaiTable load_fano_table();

nlohmann::json load_json_file(const std::string& path);

}  // namespace symsurg::fixtures
