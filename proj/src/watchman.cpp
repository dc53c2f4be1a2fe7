#include "watchwalk/watchman.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "watchwalk/domination.hpp"
#include "watchwalk/limits.hpp"
#include "watchwalk/structure.hpp"

namespace watchwalk {

bool is_closed_dominating_walk(const Digraph& d, const Walk& walk) {
  if (walk.vertices.empty() || walk.vertices.front() != walk.vertices.back()) return false;
  return follows_arcs(d, walk.vertices) && is_dominating_set(d, walk.vertex_set());
}

Walk least_rotation(const Walk& walk) {
  if (walk.length() <= 0) return walk;
  const std::vector<int> cyc(walk.vertices.begin(), walk.vertices.end() - 1);
  const std::size_t k = cyc.size();
  std::vector<int> best = cyc;
  std::vector<int> candidate(k);
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) candidate[i] = cyc[(r + i) % k];
    if (candidate < best) best = candidate;
  }
  best.push_back(best.front());
  return Walk{best};
}

bool has_watchman_walk(const Digraph& d) {
  for (VertexSet comp : strong_components(d).components) {
    if (is_dominating_set(d, comp)) return true;
  }
  return false;
}

bool source_criterion(const Digraph& d) {
  int sources = 0;
  int source = -1;
  for (int v = 0; v < d.order(); ++v) {
    if (d.in(v) == 0) {
      ++sources;
      source = v;
    }
  }
  if (sources == 0) throw PreconditionError("source criterion needs at least one source vertex");
  return sources == 1 && d.out_degree(source) == d.order() - 1;
}

namespace {

// Breadth-first search over (current vertex, dominated so far) states. On a
// minimum walk every state sits at its breadth-first depth (otherwise a
// shorter prefix could be spliced in), so counting paths through the layers
// counts minimum walks.
class StateSearch {
 public:
  StateSearch(const Digraph& d, VertexSet zone) : d_(d), zone_(zone) {}

  struct Return {
    int length = 0;
    std::int64_t walks = 0;
  };

  // Shortest closed dominating walk from `start`, no longer than `limit`,
  // and the number of such walks rooted at `start`.
  std::optional<Return> shortest_return(int start, int limit) const {
    const std::uint64_t goal = key(start, d_.vertices());
    std::unordered_set<std::uint64_t> visited;
    std::unordered_map<std::uint64_t, std::int64_t> layer{{key(start, d_.closed_out(start)), 1}};
    visited.insert(layer.begin()->first);
    for (int depth = 1; depth <= limit && !layer.empty(); ++depth) {
      std::unordered_map<std::uint64_t, std::int64_t> next;
      for (const auto& [state, count] : layer) {
        const int v = vertex_of(state);
        const VertexSet seen = dominated_of(state);
        for (VertexSet out = d_.out(v) & zone_; out != 0; out &= out - 1) {
          const int u = bits::lowest(out);
          const std::uint64_t s = key(u, seen | d_.closed_out(u));
          if (visited.contains(s)) continue;
          next[s] += count;
        }
      }
      if (auto hit = next.find(goal); hit != next.end()) return Return{depth, hit->second};
      for (const auto& entry : next) visited.insert(entry.first);
      layer = std::move(next);
    }
    return std::nullopt;
  }

  // Lexicographically least closed dominating walk of exactly `length` from `start`.
  Walk least_walk(int start, int length) const {
    std::vector<std::unordered_set<std::uint64_t>> layers(1);
    layers[0].insert(key(start, d_.closed_out(start)));
    std::unordered_set<std::uint64_t> visited = layers[0];
    for (int depth = 1; depth <= length; ++depth) {
      std::unordered_set<std::uint64_t> next;
      for (std::uint64_t state : layers.back()) {
        const VertexSet seen = dominated_of(state);
        for (VertexSet out = d_.out(vertex_of(state)) & zone_; out != 0; out &= out - 1) {
          const int u = bits::lowest(out);
          const std::uint64_t s = key(u, seen | d_.closed_out(u));
          if (!visited.contains(s)) next.insert(s);
        }
      }
      for (std::uint64_t s : next) visited.insert(s);
      layers.push_back(std::move(next));
    }
    // Keep only states that still lead to the goal.
    std::vector<std::unordered_set<std::uint64_t>> alive(length + 1);
    alive[length].insert(key(start, d_.vertices()));
    for (int depth = length - 1; depth >= 0; --depth) {
      for (std::uint64_t state : layers[depth]) {
        const VertexSet seen = dominated_of(state);
        for (VertexSet out = d_.out(vertex_of(state)) & zone_; out != 0; out &= out - 1) {
          const int u = bits::lowest(out);
          if (alive[depth + 1].contains(key(u, seen | d_.closed_out(u)))) {
            alive[depth].insert(state);
            break;
          }
        }
      }
    }
    Walk walk{{start}};
    VertexSet seen = d_.closed_out(start);
    for (int depth = 1; depth <= length; ++depth) {
      for (VertexSet out = d_.out(walk.vertices.back()) & zone_; out != 0; out &= out - 1) {
        const int u = bits::lowest(out);
        if (alive[depth].contains(key(u, seen | d_.closed_out(u)))) {
          walk.vertices.push_back(u);
          seen |= d_.closed_out(u);
          break;
        }
      }
    }
    return walk;
  }

 private:
  static std::uint64_t key(int v, VertexSet dominated) { return (dominated << 6) | static_cast<std::uint64_t>(v); }
  static int vertex_of(std::uint64_t state) { return static_cast<int>(state & 63U); }
  static VertexSet dominated_of(std::uint64_t state) { return state >> 6; }

  const Digraph& d_;
  VertexSet zone_;
};

// Dominating simple cycles of length k inside `zone`, anchored at their
// lowest vertex. Reports the count and the lexicographically first cycle.
struct CycleCount {
  std::int64_t count = 0;
  std::vector<int> first;
};

void count_cycles(const Digraph& d, VertexSet zone, int anchor, int remaining, VertexSet used, VertexSet covered,
                  std::vector<int>& path, CycleCount& out) {
  const int last = path.back();
  if (remaining == 0) {
    if (d.has_arc(last, anchor) && covered == d.vertices()) {
      if (out.count == 0) {
        out.first = path;
        out.first.push_back(anchor);
      }
      ++out.count;
    }
    return;
  }
  VertexSet next = d.out(last) & zone & ~used & ~bits::full(anchor + 1);
  if (remaining == 1) next &= d.in(anchor);
  for (; next != 0; next &= next - 1) {
    const int u = bits::lowest(next);
    path.push_back(u);
    count_cycles(d, zone, anchor, remaining - 1, used | bits::single(u), covered | d.closed_out(u), path, out);
    path.pop_back();
  }
}

CycleCount dominating_cycles(const Digraph& d, VertexSet zone, int length) {
  CycleCount result;
  for (int anchor : bits::members(zone)) {
    std::vector<int> path{anchor};
    count_cycles(d, zone, anchor, length - 1, bits::single(anchor), d.closed_out(anchor), path, result);
  }
  return result;
}

}  // namespace

WalkReport watchman_number(const Digraph& d) {
  const int cap = limits::effective(limits::kWalkStateSearch);
  if (d.order() > cap) {
    throw CapacityError("walk state search supports at most " + std::to_string(cap) + " vertices, got " +
                        std::to_string(d.order()));
  }
  WalkReport report;
  if (!has_watchman_walk(d)) return report;
  report.exists = true;

  VertexSet dominating = 0;
  for (int v = 0; v < d.order(); ++v) {
    if (d.closed_out(v) == d.vertices()) dominating |= bits::single(v);
  }
  if (dominating != 0) {
    report.w = 0;
    report.witness = Walk{{bits::lowest(dominating)}};
    report.multiplicity = bits::count(dominating);
    return report;
  }

  const Condensation cond = strong_components(d);
  int best = std::numeric_limits<int>::max();
  int best_start = -1;
  std::int64_t rooted = 0;
  for (int start = 0; start < d.order(); ++start) {
    const VertexSet zone = cond.components[cond.component_of[start]];
    if (!is_dominating_set(d, zone)) continue;
    const StateSearch search(d, zone);
    const int limit = best == std::numeric_limits<int>::max() ? 2 * d.order() * d.order() : best;
    const auto found = search.shortest_return(start, limit);
    if (!found) continue;
    if (found->length < best) {
      best = found->length;
      best_start = start;
      rooted = 0;
    }
    if (found->length == best) rooted += found->walks;
  }

  const VertexSet zone = cond.components[cond.component_of[best_start]];
  report.w = best;
  report.witness = StateSearch(d, zone).least_walk(best_start, best);
  // Minimum walks are aperiodic, so each rotation class has `best` rooted forms.
  report.multiplicity = rooted / best;
  return report;
}

TournamentProfile tournament_profile(const Tournament& t) {
  TournamentProfile profile;
  const VertexSet core = dominating_strong_component(t);
  if (bits::count(core) == 1) {
    profile.witness = Walk{{bits::lowest(core)}};
    return profile;
  }

  const std::vector<int> labels = bits::members(core);
  const Tournament sub = t.induced(core);
  const std::vector<VertexSet> minimum = all_minimum_dominating_sets(sub);
  profile.gamma = bits::count(minimum.front());
  const bool strong_set =
      std::any_of(minimum.begin(), minimum.end(), [&](VertexSet s) { return induces_strong(sub, s); });
  profile.w = strong_set ? profile.gamma : profile.gamma + 1;

  const CycleCount cycles = dominating_cycles(sub, sub.vertices(), profile.w);
  profile.multiplicity = cycles.count;
  for (int v : cycles.first) profile.witness.vertices.push_back(labels[v]);
  return profile;
}

WalkReport watchman_number_tournament(const Tournament& t) {
  const TournamentProfile profile = tournament_profile(t);
  WalkReport report;
  report.exists = true;
  report.w = profile.w;
  report.witness = profile.witness;
  report.multiplicity = profile.multiplicity;
  return report;
}

std::optional<Walk> shortest_closed_walk_through(const Digraph& d, VertexSet targets) {
  targets &= d.vertices();
  if (targets == 0) throw PreconditionError("target set must be nonempty");
  const int cap = limits::effective(limits::kWalkStateSearch);
  if (d.order() > cap) throw CapacityError("closed-walk search supports at most " + std::to_string(cap) + " vertices");
  const int target_cap = limits::effective(limits::kClosedWalkTargets);
  if (bits::count(targets) > target_cap) {
    throw CapacityError("closed-walk search supports at most " + std::to_string(target_cap) + " targets");
  }

  const std::vector<int> pts = bits::members(targets);
  if (pts.size() == 1) return Walk{{pts.front()}};
  const Condensation cond = strong_components(d);
  for (int v : pts) {
    if (cond.component_of[v] != cond.component_of[pts.front()]) return std::nullopt;
  }

  // All-pairs BFS with lowest-index predecessor for path recovery.
  const int n = d.order();
  constexpr int kFar = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
  std::vector<std::vector<int>> parent(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u : bits::members(d.out(v))) {
        if (dist[s][u] != kFar) continue;
        dist[s][u] = dist[s][v] + 1;
        parent[s][u] = v;
        queue.push_back(u);
      }
    }
  }
  auto path_between = [&](int from, int to) {
    std::vector<int> rev;
    for (int v = to; v != from; v = parent[from][v]) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());
    return rev;
  };

  // Held-Karp over the targets other than the first.
  const int k = static_cast<int>(pts.size()) - 1;
  const int start = pts.front();
  const std::size_t masks = std::size_t{1} << k;
  std::vector<int> dp(masks * k, kFar);
  for (int j = 0; j < k; ++j) dp[(std::size_t{1} << j) * k + j] = dist[start][pts[j + 1]];
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (int j = 0; j < k; ++j) {
      const int here = dp[mask * k + j];
      if (!((mask >> j) & 1U) || here >= kFar) continue;
      for (int nxt = 0; nxt < k; ++nxt) {
        if ((mask >> nxt) & 1U) continue;
        const std::size_t m2 = mask | (std::size_t{1} << nxt);
        dp[m2 * k + nxt] = std::min(dp[m2 * k + nxt], here + dist[pts[j + 1]][pts[nxt + 1]]);
      }
    }
  }
  const std::size_t full = masks - 1;
  int best = kFar;
  int last = -1;
  for (int j = 0; j < k; ++j) {
    const int total = dp[full * k + j] + dist[pts[j + 1]][start];
    if (total < best) {
      best = total;
      last = j;
    }
  }

  std::vector<int> order;
  std::size_t mask = full;
  for (int j = last; j >= 0;) {
    order.push_back(j);
    const std::size_t prev = mask & ~(std::size_t{1} << j);
    int from = -1;
    if (prev != 0) {
      for (int i = 0; i < k; ++i) {
        if (((prev >> i) & 1U) && dp[prev * k + i] + dist[pts[i + 1]][pts[j + 1]] == dp[mask * k + j]) {
          from = i;
          break;
        }
      }
    }
    mask = prev;
    j = from;
  }
  std::reverse(order.begin(), order.end());

  Walk walk{{start}};
  int at = start;
  for (int j : order) {
    for (int v : path_between(at, pts[j + 1])) walk.vertices.push_back(v);
    at = pts[j + 1];
  }
  for (int v : path_between(at, start)) walk.vertices.push_back(v);
  return walk;
}

}  // namespace watchwalk
