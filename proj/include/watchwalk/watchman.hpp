#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "watchwalk/digraph.hpp"

namespace watchwalk {

/// Closed walk v0, ..., vk with vk == v0. A single vertex is the length-0 walk.
struct Walk {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  VertexSet vertex_set() const { return bits::from_list(vertices); }
  int distinct_vertices() const { return bits::count(vertex_set()); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Result of a watchman number computation. When `exists` is false every
/// optional is empty.
struct WalkReport {
  bool exists = false;
  std::optional<int> w;
  std::optional<Walk> witness;
  /// Minimum closed dominating walks counted up to rotation.
  std::optional<std::int64_t> multiplicity;
};

/// Closed, follows arcs, and its vertex set dominates `d`.
bool is_closed_dominating_walk(const Digraph& d, const Walk& walk);

/// Rotation with the lexicographically least vertex sequence.
Walk least_rotation(const Walk& walk);

/// True iff the vertex set of some maximal strong component dominates.
bool has_watchman_walk(const Digraph& d);

/// For digraphs with at least one source: true iff there is exactly one and
/// it beats every other vertex. Throws PreconditionError without a source.
bool source_criterion(const Digraph& d);

/// Exact search over (vertex, dominated-set) states. Throws CapacityError
/// beyond limits::kWalkStateSearch vertices.
WalkReport watchman_number(const Digraph& d);

/// Watchman number, domination number and multiplicity of a tournament.
struct TournamentProfile {
  int w = 0;
  int gamma = 1;
  std::int64_t multiplicity = 1;
  Walk witness;
};

/// Works inside the dominating strong component and decides between gamma
/// and gamma + 1 by whether some minimum dominating set induces a strong
/// subtournament. Minimum walks are then dominating cycles of length w.
TournamentProfile tournament_profile(const Tournament& t);

WalkReport watchman_number_tournament(const Tournament& t);

/// Shortest closed walk visiting every vertex of `targets`. Absent when the
/// targets do not share a strong component; a single target gives the
/// length-0 walk.
std::optional<Walk> shortest_closed_walk_through(const Digraph& d, VertexSet targets);

}  // namespace watchwalk
