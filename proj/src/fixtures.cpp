#include "symsurg/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef SYMSURG_DEFAULT_DATA_DIR
#define SYMSURG_DEFAULT_DATA_DIR "data"
#endif

namespace symsurg::fixtures {

std::string data_dir() {
  if (const char* env = std::getenv("SYMSURG_DATA_DIR")) return env;
  return SYMSURG_DEFAULT_DATA_DIR;
}

std::vector<std::string> profile_names() { return {"p2xp1", "quintic"}; }
std::vector<std::string> word_names() { return {"e1_four_I3"}; }
std::vector<std::string> sketch_names() { return {"e1_sketch", "triple_point_sketch"}; }

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture file not found: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

namespace {
void require_registered(const std::vector<std::string>& names, const std::string& name,
                        const char* kind) {
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument(std::string("unknown ") + kind + " fixture: " + name);
}
}  // namespace

profile::InvariantProfile load_profile(const std::string& name) {
  require_registered(profile_names(), name, "profile");
  return profile::profile_from_json(load_json_file(data_dir() + "/fixtures/" + name + ".json"));
}

monodromy::TwistWord load_word(const std::string& name) {
  require_registered(word_names(), name, "twist-word");
  return monodromy::word_from_json(load_json_file(data_dir() + "/fixtures/" + name + ".json"));
}

fibre::FibrationSketch load_sketch(const std::string& name) {
  require_registered(sketch_names(), name, "sketch");
  return fibre::sketch_from_json(load_json_file(data_dir() + "/fixtures/" + name + ".json"));
}

profile::MoriMukaiTable load_fano_table() {
  return profile::MoriMukaiTable::load(data_dir() + "/mori_mukai.json");
}

}  // namespace symsurg::fixtures
