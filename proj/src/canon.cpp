#include "canon.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace watchwalk::detail {

SmallTournament compact(const Tournament& t) {
  SmallTournament s;
  s.n = t.order();
  for (int v = 0; v < s.n; ++v) s.out[v] = static_cast<std::uint16_t>(t.out(v));
  return s;
}

Tournament expand(const SmallTournament& t) {
  std::vector<VertexSet> rows(t.n);
  for (int v = 0; v < t.n; ++v) rows[v] = t.out[v];
  return Tournament(Digraph(t.n, rows));
}

namespace {

// Ordered partition as a cell index per vertex; cells are numbered in order.
struct Partition {
  std::array<std::uint8_t, kSmallMax> cell{};
  int cells = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const SmallTournament& t) : t_(t) {}

  Partition root() const {
    Partition p;
    // Start from a single cell; the first refinement pass sorts by score.
    p.cells = 1;
    refine(p);
    return p;
  }

  Canonical run(const Partition& start) {
    search(start);
    return {best_, last_};
  }

 private:
  // Split cells by the number of out-neighbours each vertex has in every
  // cell, until nothing changes. Fragments keep the order of their parent
  // cell, so each vertex's final position stays inside its cell's range.
  void refine(Partition& p) const {
    const int n = t_.n;
    for (;;) {
      std::array<std::uint16_t, kSmallMax> members{};
      for (int v = 0; v < n; ++v) members[p.cell[v]] |= static_cast<std::uint16_t>(1U << v);
      std::array<std::array<std::uint8_t, kSmallMax + 1>, kSmallMax> sig{};
      for (int v = 0; v < n; ++v) {
        sig[v][0] = p.cell[v];
        for (int c = 0; c < p.cells; ++c) sig[v][c + 1] = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(t_.out[v] & members[c])));
      }
      std::array<std::uint8_t, kSmallMax> order{};
      for (int v = 0; v < n; ++v) order[v] = static_cast<std::uint8_t>(v);
      const int width = p.cells + 1;
      auto less = [&](int a, int b) {
        return std::lexicographical_compare(sig[a].begin(), sig[a].begin() + width, sig[b].begin(), sig[b].begin() + width);
      };
      std::sort(order.begin(), order.begin() + n, less);
      int id = 0;
      Partition next;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && less(order[i - 1], order[i])) ++id;
        next.cell[order[i]] = static_cast<std::uint8_t>(id);
      }
      next.cells = id + 1;
      const bool stable = next.cells == p.cells;
      p = next;
      if (stable) return;
    }
  }

  void search(const Partition& p) {
    const int n = t_.n;
    if (p.cells == n) {
      leaf(p);
      return;
    }
    // First non-singleton cell.
    std::array<int, kSmallMax> size{};
    for (int v = 0; v < n; ++v) ++size[p.cell[v]];
    int target = 0;
    while (size[target] == 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (p.cell[v] != target) continue;
      Partition child;
      child.cells = p.cells + 1;
      for (int u = 0; u < n; ++u) {
        const int c = p.cell[u];
        child.cell[u] = static_cast<std::uint8_t>(c < target || u == v ? c : c + 1);
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const Partition& p) {
    const int n = t_.n;
    std::array<int, kSmallMax> perm{};
    for (int v = 0; v < n; ++v) perm[p.cell[v]] = v;
    std::array<std::uint64_t, 2> words{};
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if ((t_.out[perm[i]] >> perm[j]) & 1U) words[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
      }
    }
    const CanonicalCode code(n, words);
    const std::uint32_t last = 1U << perm[n - 1];
    if (!found_ || code < best_) {
      found_ = true;
      best_ = code;
      last_ = last;
    } else if (code == best_) {
      last_ |= last;
    }
  }

  const SmallTournament& t_;
  bool found_ = false;
  CanonicalCode best_;
  std::uint32_t last_ = 0;
};

}  // namespace

Canonical canonize(const SmallTournament& t) {
  Canonizer c(t);
  return c.run(c.root());
}

std::optional<CanonicalCode> accept_as_last(const SmallTournament& t, int newest) {
  const int n = t.n;
  // Cheap test: the last root cell holds the vertices of top score.
  const int score = std::popcount(static_cast<unsigned>(t.out[newest]));
  for (int v = 0; v < n; ++v) {
    if (std::popcount(static_cast<unsigned>(t.out[v])) > score) return std::nullopt;
  }
  Canonizer c(t);
  const Partition root = c.root();
  int last_cell = 0;
  for (int v = 0; v < n; ++v) last_cell = std::max(last_cell, static_cast<int>(root.cell[v]));
  if (root.cell[newest] != last_cell) return std::nullopt;
  const Canonical result = c.run(root);
  if (((result.last_vertices >> newest) & 1U) == 0) return std::nullopt;
  return result.code;
}

std::vector<SmallTournament> augment(const SmallTournament& parent) {
  const int n = parent.n + 1;
  const int x = parent.n;
  std::set<CanonicalCode> seen;
  std::vector<std::pair<CanonicalCode, SmallTournament>> kept;
  for (std::uint32_t mask = 0; mask < (1U << parent.n); ++mask) {
    SmallTournament child;
    child.n = n;
    for (int v = 0; v < parent.n; ++v) {
      child.out[v] = parent.out[v];
      if (((mask >> v) & 1U) == 0) child.out[v] |= static_cast<std::uint16_t>(1U << x);
    }
    child.out[x] = static_cast<std::uint16_t>(mask);
    auto code = accept_as_last(child, x);
    if (code && seen.insert(*code).second) kept.emplace_back(*code, child);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SmallTournament> result;
  result.reserve(kept.size());
  for (auto& entry : kept) result.push_back(entry.second);
  return result;
}

}  // namespace watchwalk::detail
