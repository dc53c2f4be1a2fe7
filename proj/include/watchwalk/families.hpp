#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "watchwalk/digraph.hpp"
#include "watchwalk/watchman.hpp"

namespace watchwalk {

/// Part sizes of a complete multipartite graph: at least two positive parts,
/// at most 64 vertices in total.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<int> part_sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const;
  /// Vertex set of part i; parts occupy consecutive index ranges.
  VertexSet part(int i) const;

 private:
  std::vector<int> sizes_;
};

/// Non-decreasing out-degree sequence satisfying Landau's conditions.
class ScoreSequence {
 public:
  explicit ScoreSequence(std::vector<int> scores);

  const std::vector<int>& scores() const { return scores_; }
  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<int> scores_;
};

Tournament transitive(int n);

/// Quadratic-residue tournament on Z_q; q prime, q = 3 mod 4, q <= 61.
Tournament paley(int q);

/// Arcs i -> i+s (mod n) for s in `connection`, which must hold exactly one
/// of s, n-s for every s in 1..n-1.
Tournament circulant(int n, const std::vector<int>& connection);

/// Orientations are drawn from std::mt19937_64 seeded with `seed`, one
/// high-order bit per pair in row-major pair order, so output is identical
/// on every platform.
Tournament random_tournament(int n, std::uint64_t seed);
Digraph random_orientation(const PartitionSpec& spec, std::uint64_t seed);

/// New vertex n beats every vertex.
Tournament add_source(const Tournament& t);
/// Every vertex beats the new vertex n.
Tournament add_sink(const Tournament& t);

/// Strong tournament of order n+1 containing `t` with the same domination
/// number: with u the first vertex of hamilton_path(t), the new vertex is
/// beaten by everything except u, which it beats. Requires `t` non-strong
/// with domination number at least 3.
Tournament strongify(const Tournament& t);

ScoreSequence score_sequence(const Tournament& t);

/// Every strong component's own score sequence is (0), (1,1,1), (1,1,2,2) or
/// (2,2,2,2,2).
bool is_simple(const Tournament& t);

struct LocalTransitivity {
  bool in = false;
  bool out = false;
  bool both() const { return in && out; }
};

LocalTransitivity local_transitivity(const Tournament& t);

/// True when `d` orients the complete multipartite graph of `spec`.
bool is_multipartite_orientation(const Digraph& d, const PartitionSpec& spec);

/// Closed walk u1 v1 u2 v2 ... um vm u1 for an orientation of a complete
/// bipartite graph with sides `side_a` and its complement. Requires every
/// vertex to have an in-neighbour, |A| <= |B|, and `dominators` (a subset of
/// B) to dominate each vertex of A exactly once through a bijection. Throws
/// PreconditionError otherwise. The in-neighbour condition already rules
/// out |A| = 1.
Walk bipartite_walk_construction(const Digraph& d, VertexSet side_a, VertexSet dominators);

/// Named digraphs: fig1_path, fig2_windmill, fig_paley7, fig_unique14.
const std::map<std::string, Digraph>& fixtures();
const Digraph& fixture(const std::string& name);

/// Windmill vertex labels: v1..v7 are 0..6, u1..u8 are 7..14.
namespace windmill {
constexpr int v(int i) { return i - 1; }
constexpr int u(int i) { return 6 + i; }
}  // namespace windmill

/// Generator strings: transitive:N, paley:Q, circulant:N:s1,s2,...,
/// random:N:SEED, fixture:NAME. Throws std::invalid_argument when malformed.
Digraph from_generator(const std::string& spec);

}  // namespace watchwalk
