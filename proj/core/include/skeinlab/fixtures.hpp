#pragma once

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

struct Fixture {
  std::string name;
  LinkDiagram diagram;
  int components = 1;
  std::string source;
};

struct FixtureSet {
  /// Alternating adequate diagrams used by the verification suites.
  std::vector<Fixture> fixtures;
  /// Diagrams kept for negative checks; not validated.
  std::vector<Fixture> counterexamples;

  /// Throws InputError when the name is unknown.
  const Fixture& get(const std::string& name) const;
};

/// Directory holding fixtures.json: $SKEINLAB_DATA_DIR if set, else the
/// location chosen at build time.
std::string default_data_dir();

/// Reads and validates a fixture file. Every entry under "fixtures" must parse,
/// have the stated component count, and be alternating and adequate;
/// otherwise InputError.
FixtureSet load_fixtures(const std::string& path);
/// load_fixtures(default_data_dir() + "/fixtures.json").
FixtureSet load_default_fixtures();

}  // namespace skeinlab
