#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "watchwalk/digraph.hpp"
#include "watchwalk/domination.hpp"
#include "watchwalk/watchman.hpp"

namespace watchwalk {

/// Scale of a property run. Enumerated suites visit every isomorphism class
/// with order in [min_n, max_n]; randomized suites draw `samples` instances
/// from `seed`. A negative `samples` selects the suite's default.
struct PropertyOptions {
  int min_n = 7;
  int max_n = 7;
  std::uint64_t seed = 1;
  int samples = -1;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::int64_t checked = 0;
  std::string detail;
  /// Tournament code, or edge list for general digraphs.
  std::optional<std::string> counterexample;
};

/// The engines a suite exercises. Tests swap in faulty ones to check that
/// failures are caught and reported.
struct Engines {
  std::function<WalkReport(const Digraph&)> walk = watchman_number;
  std::function<TournamentProfile(const Tournament&)> profile = tournament_profile;
  std::function<SetWitness(const Digraph&)> gamma = domination_number;
};

const std::vector<std::string>& property_names();

/// Throws std::invalid_argument for an unknown name.
PropertyResult run_property(const std::string& name, const PropertyOptions& options, const Engines& engines = {});

}  // namespace watchwalk
