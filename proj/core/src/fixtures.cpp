#include "skeinlab/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "skeinlab/errors.hpp"

#ifndef SKEINLAB_DEFAULT_DATA_DIR
#define SKEINLAB_DEFAULT_DATA_DIR "data"
#endif

namespace skeinlab {

namespace {

Fixture read_entry(const nlohmann::json& e, const std::string& path) {
  Fixture f;
  try {
    f.name = e.at("name").get<std::string>();
    f.diagram = parse_pd(e.at("pd").get<std::string>());
    f.components = e.value("components", 1);
    f.source = e.value("source", std::string{});
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(path + ": bad fixture entry: " + ex.what());
  }
  f.diagram.set_name(f.name);
  return f;
}

}  // namespace

const Fixture& FixtureSet::get(const std::string& name) const {
  for (const auto* list : {&fixtures, &counterexamples})
    for (const auto& f : *list)
      if (f.name == name) return f;
  throw InputError("unknown fixture: " + name);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("SKEINLAB_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return SKEINLAB_DEFAULT_DATA_DIR;
}

FixtureSet load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(path + ": " + ex.what());
  }
  FixtureSet set;
  for (const auto& e : j.value("fixtures", nlohmann::json::array())) {
    Fixture f = read_entry(e, path);
    const int comps = f.diagram.component_count();
    if (comps != f.components)
      throw InputError(path + ": " + f.name + " has " + std::to_string(comps) + " components, expected " +
                       std::to_string(f.components));
    if (!is_alternating(f.diagram)) throw InputError(path + ": " + f.name + " is not alternating");
    if (!is_adequate(f.diagram)) throw InputError(path + ": " + f.name + " is not adequate");
    set.fixtures.push_back(std::move(f));
  }
  for (const auto& e : j.value("counterexamples", nlohmann::json::array())) set.counterexamples.push_back(read_entry(e, path));
  return set;
}

FixtureSet load_default_fixtures() { return load_fixtures(default_data_dir() + "/fixtures.json"); }

}  // namespace skeinlab
