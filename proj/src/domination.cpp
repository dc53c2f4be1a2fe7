#include "watchwalk/domination.hpp"

#include "cover_search.hpp"
#include "watchwalk/structure.hpp"

namespace watchwalk {

namespace {

using detail::CoverSearch;

int greedy_cover_size(const std::array<VertexSet, kMaxVertices>& cover, int n, VertexSet target) {
  VertexSet covered = 0;
  int picks = 0;
  while ((target & ~covered) != 0) {
    int best = -1;
    int gain = 0;
    for (int v = 0; v < n; ++v) {
      const int g = bits::count(cover[v] & target & ~covered);
      if (g > gain) {
        gain = g;
        best = v;
      }
    }
    if (best < 0) return n + 1;
    covered |= cover[best];
    ++picks;
  }
  return picks;
}

std::optional<VertexSet> first_of_size(const CoverSearch& search, int k) {
  std::optional<VertexSet> found;
  search.run(k, [&](VertexSet s) {
    found = s;
    return true;
  });
  return found;
}

// Smallest k in [lo, hi] admitting an accepted cover; first such set.
template <class Accept>
std::optional<SetWitness> smallest_accepted(const CoverSearch& search, int lo, int hi, Accept accept) {
  for (int k = lo; k <= hi; ++k) {
    std::optional<VertexSet> found;
    search.run(k, [&](VertexSet s) {
      if (!accept(s)) return false;
      found = s;
      return true;
    });
    if (found) return SetWitness{k, *found};
  }
  return std::nullopt;
}

bool cycle_search(const Digraph& d, VertexSet zone, int anchor, int remaining, VertexSet used, VertexSet covered,
                  std::vector<int>& path) {
  const int last = path.back();
  if (remaining == 0) return d.has_arc(last, anchor) && covered == d.vertices();
  const VertexSet allowed = zone & ~bits::full(anchor + 1) & ~used;
  VertexSet next = d.out(last) & allowed;
  if (remaining == 1) next &= d.in(anchor);
  for (; next != 0; next &= next - 1) {
    const int u = bits::lowest(next);
    path.push_back(u);
    if (cycle_search(d, zone, anchor, remaining - 1, used | bits::single(u), covered | d.closed_out(u), path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

SetWitness domination_number(const Digraph& d) {
  const auto cover = detail::closed_cover(d);
  const CoverSearch search(cover, d.vertices(), d.vertices());
  const int upper = greedy_cover_size(cover, d.order(), d.vertices());
  for (int k = 1; k <= upper; ++k) {
    if (auto s = first_of_size(search, k)) return {k, *s};
  }
  // Unreachable: the greedy cover has size `upper`.
  return {d.order(), d.vertices()};
}

std::vector<VertexSet> all_minimum_dominating_sets(const Digraph& d) {
  const int gamma = domination_number(d).size;
  const auto cover = detail::closed_cover(d);
  const CoverSearch search(cover, d.vertices(), d.vertices());
  std::vector<VertexSet> sets;
  search.run(gamma, [&](VertexSet s) {
    sets.push_back(s);
    return false;
  });
  return sets;
}

std::optional<SetWitness> total_domination_number(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v) {
    if (d.in(v) == 0) return std::nullopt;
  }
  std::array<VertexSet, kMaxVertices> cover{};
  for (int v = 0; v < d.order(); ++v) cover[v] = d.out(v);
  const CoverSearch search(cover, d.vertices(), d.vertices());
  const int upper = greedy_cover_size(cover, d.order(), d.vertices());
  for (int k = 1; k <= upper; ++k) {
    if (auto s = first_of_size(search, k)) return SetWitness{k, *s};
  }
  return std::nullopt;
}

std::optional<CycleWitness> cycle_domination_number(const Digraph& d) {
  const int n = d.order();
  // A cycle stays inside one strong component, which must then dominate.
  std::vector<int> zone_of(n, -1);
  std::vector<VertexSet> zones;
  for (VertexSet comp : strong_components(d).components) {
    if (bits::count(comp) < 2 || !is_dominating_set(d, comp)) continue;
    for (int v : bits::members(comp)) zone_of[v] = static_cast<int>(zones.size());
    zones.push_back(comp);
  }
  if (zones.empty()) return std::nullopt;
  for (int length = 2; length <= n; ++length) {
    for (int anchor = 0; anchor + length <= n; ++anchor) {
      if (zone_of[anchor] < 0 || bits::count(zones[zone_of[anchor]]) < length) continue;
      std::vector<int> path{anchor};
      if (cycle_search(d, zones[zone_of[anchor]], anchor, length - 1, bits::single(anchor), d.closed_out(anchor), path)) {
        path.push_back(anchor);
        return CycleWitness{length, path};
      }
    }
  }
  return std::nullopt;
}

ConnectedDomination connected_domination_numbers(const Digraph& d) {
  const auto cover = detail::closed_cover(d);
  const CoverSearch search(cover, d.vertices(), d.vertices());
  const int gamma = domination_number(d).size;
  const int n = d.order();

  // A connected dominating set sits inside one component, and that whole
  // component then dominates; so existence reduces to the components.
  bool weak_exists = false;
  for (VertexSet seen = 0; seen != d.vertices();) {
    const int v = bits::lowest(d.vertices() & ~seen);
    VertexSet comp = bits::single(v);
    for (VertexSet grown = 0; grown != comp;) {
      grown = comp;
      for (int u : bits::members(comp)) comp |= d.out(u) | d.in(u);
    }
    seen |= comp;
    weak_exists = weak_exists || is_dominating_set(d, comp);
  }
  bool strong_exists = false;
  for (VertexSet comp : strong_components(d).components) strong_exists = strong_exists || is_dominating_set(d, comp);

  ConnectedDomination result;
  if (weak_exists) {
    result.weak = smallest_accepted(search, gamma, n, [&](VertexSet s) { return induces_weak(d, s); });
  }
  if (strong_exists) {
    const int lo = result.weak ? result.weak->size : gamma;
    result.strong = smallest_accepted(search, lo, n, [&](VertexSet s) { return induces_strong(d, s); });
  }
  return result;
}

DominationReport domination_report(const Digraph& d) {
  DominationReport report;
  report.gamma = domination_number(d);
  report.gamma_t = total_domination_number(d);
  report.gamma_cyc = cycle_domination_number(d);
  const auto connected = connected_domination_numbers(d);
  report.gamma_wc = connected.weak;
  report.gamma_sc = connected.strong;
  return report;
}

}  // namespace watchwalk
