#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "watchwalk/digraph.hpp"

namespace watchwalk::detail {

// Enumerates k-subsets of `pool` in lexicographic order, reporting those
// whose union of cover[v] contains `target`.
class CoverSearch {
 public:
  CoverSearch(const std::array<VertexSet, kMaxVertices>& cover, VertexSet pool, VertexSet target)
      : cover_(cover), pool_(pool), target_(target) {
    for (VertexSet p = pool; p != 0; p &= p - 1) {
      const int v = bits::lowest(p);
      max_cover_ = std::max(max_cover_, bits::count(cover_[v] & target));
      for (VertexSet c = cover_[v] & target; c != 0; c &= c - 1) coverers_[bits::lowest(c)] |= bits::single(v);
    }
  }

  // `visit(set)` returns true to stop the enumeration; run() then returns true.
  template <class Visit>
  bool run(int k, Visit&& visit) const {
    if (k < 0 || bits::count(pool_) < k) return false;
    return recurse(k, 0, 0, pool_, visit);
  }

 private:
  template <class Visit>
  bool recurse(int left, VertexSet chosen, VertexSet covered, VertexSet avail, Visit& visit) const {
    const VertexSet uncovered = target_ & ~covered;
    if (left == 0) return uncovered == 0 && visit(chosen);
    if (bits::count(avail) < left) return false;
    VertexSet branch = avail;
    if (uncovered != 0) {
      if (bits::count(uncovered) > left * max_cover_) return false;
      // The lowest uncovered vertex needs a coverer among the remaining picks.
      const VertexSet needed = coverers_[bits::lowest(uncovered)] & avail;
      if (needed == 0) return false;
      // Picks are ascending, so the next pick may not pass its last coverer.
      const int last = 63 - std::countl_zero(needed);
      branch &= bits::full(last + 1);
    }
    for (; branch != 0; branch &= branch - 1) {
      const int v = bits::lowest(branch);
      const VertexSet above = avail & ~bits::full(v + 1);
      if (recurse(left - 1, chosen | bits::single(v), covered | cover_[v], above, visit)) return true;
    }
    return false;
  }

  const std::array<VertexSet, kMaxVertices>& cover_;
  VertexSet pool_;
  VertexSet target_;
  int max_cover_ = 0;
  std::array<VertexSet, kMaxVertices> coverers_{};
};

inline std::array<VertexSet, kMaxVertices> closed_cover(const Digraph& d) {
  std::array<VertexSet, kMaxVertices> cover{};
  for (int v = 0; v < d.order(); ++v) cover[v] = d.closed_out(v);
  return cover;
}

}  // namespace watchwalk::detail
