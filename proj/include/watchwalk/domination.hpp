#pragma once

#include <optional>
#include <vector>

#include "watchwalk/digraph.hpp"

namespace watchwalk {

/// A minimum set for some domination variant together with the first
/// (lexicographically least) set achieving it.
struct SetWitness {
  int size = 0;
  VertexSet set = 0;
};

/// Shortest dominating directed cycle; `cycle` is closed (front == back).
struct CycleWitness {
  int length = 0;
  std::vector<int> cycle;
};

struct DominationReport {
  SetWitness gamma;
  std::optional<SetWitness> gamma_t;
  std::optional<CycleWitness> gamma_cyc;
  std::optional<SetWitness> gamma_wc;
  std::optional<SetWitness> gamma_sc;
};

SetWitness domination_number(const Digraph& d);

/// Every dominating set of size gamma, in lexicographic order of their sorted
/// member lists.
std::vector<VertexSet> all_minimum_dominating_sets(const Digraph& d);

/// Every vertex needs an in-neighbour inside the set; absent when some vertex
/// has in-degree zero.
std::optional<SetWitness> total_domination_number(const Digraph& d);

/// Cycles are searched by increasing length, anchored at their lowest vertex,
/// inside strong components that dominate.
std::optional<CycleWitness> cycle_domination_number(const Digraph& d);

struct ConnectedDomination {
  std::optional<SetWitness> weak;
  std::optional<SetWitness> strong;
};

ConnectedDomination connected_domination_numbers(const Digraph& d);

DominationReport domination_report(const Digraph& d);

}  // namespace watchwalk
