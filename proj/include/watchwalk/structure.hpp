#pragma once

#include <optional>
#include <vector>

#include "watchwalk/digraph.hpp"

namespace watchwalk {

/// Maximal strong components in topological order (sources first), with the
/// quotient digraph on component indices.
struct Condensation {
  std::vector<VertexSet> components;
  Digraph quotient;
  std::vector<int> component_of;
};

/// Vertices reachable from `start` (inclusive) using only vertices in `within`.
VertexSet reachable_from(const Digraph& d, int start, VertexSet within);
/// Vertices that reach `target` (inclusive) using only vertices in `within`.
VertexSet reaching(const Digraph& d, int target, VertexSet within);

/// Ties between simultaneously available components go to the one holding
/// the lowest vertex index.
Condensation strong_components(const Digraph& d);

/// True when the subdigraph induced on `s` is strongly connected. The empty
/// set is not; a single vertex is.
bool induces_strong(const Digraph& d, VertexSet s);
/// Weak connectivity of the subdigraph induced on `s`.
bool induces_weak(const Digraph& d, VertexSet s);

bool is_strongly_connected(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// Vertex set of the source component of the condensation.
VertexSet dominating_strong_component(const Tournament& t);

/// Union of closed out-neighbourhoods of `s`.
VertexSet dominated_by(const Digraph& d, VertexSet s);
bool is_dominating_set(const Digraph& d, VertexSet s);

/// Insertion construction: vertices are taken in index order and each one is
/// placed at the first position where it fits.
std::vector<int> hamilton_path(const Tournament& t);

/// Closed vertex sequence (first == last) through every vertex, or nullopt
/// when `t` is not strong. A single vertex yields the length-0 walk {0}.
std::optional<std::vector<int>> hamilton_cycle(const Tournament& t);

/// Closed sequence of k distinct vertices starting and ending at v, or nullopt.
/// Throws PreconditionError unless 3 <= k <= n.
std::optional<std::vector<int>> cycle_through_vertex(const Tournament& t, int v, int k);

/// True when consecutive entries of `seq` are arcs of `d`.
bool follows_arcs(const Digraph& d, const std::vector<int>& seq);

}  // namespace watchwalk
