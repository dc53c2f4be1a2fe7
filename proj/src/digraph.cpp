#include "watchwalk/digraph.hpp"

#include <string>

namespace watchwalk {

namespace bits {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  while (s != 0) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

VertexSet from_list(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= single(v);
  return s;
}

}  // namespace bits

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) + " outside supported range [1, " +
                        std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Digraph::Digraph(int n, const std::vector<VertexSet>& out_adjacency) : n_(n) {
  check_order(n);
  if (static_cast<int>(out_adjacency.size()) != n) {
    throw std::invalid_argument("adjacency has " + std::to_string(out_adjacency.size()) +
                                " rows, expected " + std::to_string(n));
  }
  const VertexSet all = bits::full(n);
  for (int u = 0; u < n; ++u) {
    const VertexSet row = out_adjacency[u];
    if (row & ~all) throw std::invalid_argument("arc endpoint out of range at vertex " + std::to_string(u));
    if (bits::contains(row, u)) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    out_[u] = row;
    for (VertexSet r = row; r != 0; r &= r - 1) in_[bits::lowest(r)] |= bits::single(u);
  }
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  check_order(n);
  std::vector<VertexSet> rows(n, 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("arc " + std::to_string(u) + "->" + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n));
    }
    rows[u] |= bits::single(v);
  }
  return Digraph(n, rows);
}

int Digraph::arc_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += bits::count(out_[v]);
  return m;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(arc_count());
  for (int u = 0; u < n_; ++u) {
    for (int v : bits::members(out_[u])) result.emplace_back(u, v);
  }
  return result;
}

bool Digraph::is_tournament() const {
  for (int v = 0; v < n_; ++v) {
    if ((out_[v] & in_[v]) != 0) return false;
    if ((out_[v] | in_[v] | bits::single(v)) != vertices()) return false;
  }
  return true;
}

bool Digraph::is_digon_free() const {
  for (int v = 0; v < n_; ++v) {
    if ((out_[v] & in_[v]) != 0) return false;
  }
  return true;
}

Digraph Digraph::induced(VertexSet keep) const {
  keep &= vertices();
  const std::vector<int> kept = bits::members(keep);
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int v : bits::members(out_[kept[i]] & keep)) rows[i] |= bits::single(index[v]);
  }
  return Digraph(static_cast<int>(kept.size()), rows);
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.out_[v] != b.out_[v]) return false;
  }
  return true;
}

Tournament::Tournament(const Digraph& d) : Digraph(d) {
  if (!d.is_tournament()) throw std::invalid_argument("digraph is not a tournament");
}

Tournament Tournament::induced(VertexSet keep) const { return Tournament(Digraph::induced(keep)); }

}  // namespace watchwalk
