#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace watchwalk {

/// Vertex subsets are single machine words; bit i stands for vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Raised when an input exceeds a hard or configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when an input violates an operation's structural precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace bits {

constexpr VertexSet single(int v) { return VertexSet{1} << v; }

constexpr VertexSet full(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int count(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Members of s in ascending order.
std::vector<int> members(VertexSet s);

VertexSet from_list(const std::vector<int>& vertices);

}  // namespace bits

/// Loop-free directed graph on vertices 0..n-1, stored as out- and
/// in-neighbourhood bit sets. Values are immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  /// Throws CapacityError if n is outside [1, 64], std::invalid_argument
  /// on loops or out-of-range bits.
  Digraph(int n, const std::vector<VertexSet>& out_adjacency);

  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  VertexSet vertices() const { return bits::full(n_); }

  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  /// Closed out-neighbourhood N+[v].
  VertexSet closed_out(int v) const { return out_[v] | bits::single(v); }

  bool has_arc(int u, int v) const { return bits::contains(out_[u], v); }
  int out_degree(int v) const { return bits::count(out_[v]); }
  int in_degree(int v) const { return bits::count(in_[v]); }
  int arc_count() const;

  /// Arcs (u, v) sorted by u then v.
  std::vector<std::pair<int, int>> arcs() const;

  /// True when every unordered pair carries exactly one arc.
  bool is_tournament() const;
  /// True when no pair carries arcs in both directions.
  bool is_digon_free() const;

  /// Subdigraph induced on `keep`, relabelled 0..|keep|-1 in ascending order.
  Digraph induced(VertexSet keep) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> out_{};
  std::array<VertexSet, kMaxVertices> in_{};
};

/// A Digraph with exactly one arc per unordered vertex pair.
class Tournament : public Digraph {
 public:
  Tournament() = default;
  /// Throws std::invalid_argument if `d` is not a tournament.
  explicit Tournament(const Digraph& d);

  Tournament induced(VertexSet keep) const;
};

}  // namespace watchwalk
