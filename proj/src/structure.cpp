#include "watchwalk/structure.hpp"

#include <algorithm>

namespace watchwalk {

VertexSet reachable_from(const Digraph& d, int start, VertexSet within) {
  VertexSet seen = bits::single(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= d.out(bits::lowest(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet reaching(const Digraph& d, int target, VertexSet within) {
  VertexSet seen = bits::single(target);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= d.in(bits::lowest(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Condensation strong_components(const Digraph& d) {
  const int n = d.order();
  const VertexSet all = d.vertices();

  // Components are discovered in order of their lowest vertex.
  std::vector<VertexSet> found;
  std::vector<int> comp(n, -1);
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    const VertexSet c = reachable_from(d, v, all) & reaching(d, v, all);
    for (int u : bits::members(c)) comp[u] = static_cast<int>(found.size());
    found.push_back(c);
  }

  const int k = static_cast<int>(found.size());
  std::vector<VertexSet> succ(k, 0);
  std::vector<int> indegree(k, 0);
  for (int a = 0; a < k; ++a) {
    VertexSet out = 0;
    for (int u : bits::members(found[a])) out |= d.out(u);
    out &= ~found[a];
    for (int v : bits::members(out)) succ[a] |= bits::single(comp[v]);
  }
  for (int a = 0; a < k; ++a) {
    for (int b : bits::members(succ[a])) ++indegree[b];
  }

  // Kahn's algorithm; lowest discovery index (= lowest vertex) first.
  std::vector<int> order;
  order.reserve(k);
  VertexSet ready = 0;
  for (int a = 0; a < k; ++a) {
    if (indegree[a] == 0) ready |= bits::single(a);
  }
  while (ready != 0) {
    const int a = bits::lowest(ready);
    ready &= ready - 1;
    order.push_back(a);
    for (int b : bits::members(succ[a])) {
      if (--indegree[b] == 0) ready |= bits::single(b);
    }
  }

  std::vector<int> position(k);
  for (int i = 0; i < k; ++i) position[order[i]] = i;

  Condensation result;
  result.components.resize(k);
  for (int i = 0; i < k; ++i) result.components[i] = found[order[i]];
  result.component_of.resize(n);
  for (int v = 0; v < n; ++v) result.component_of[v] = position[comp[v]];
  std::vector<VertexSet> rows(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b : bits::members(succ[a])) rows[position[a]] |= bits::single(position[b]);
  }
  result.quotient = Digraph(k, rows);
  return result;
}

bool induces_strong(const Digraph& d, VertexSet s) {
  if (s == 0) return false;
  const int v = bits::lowest(s);
  return reachable_from(d, v, s) == s && reaching(d, v, s) == s;
}

bool induces_weak(const Digraph& d, VertexSet s) {
  if (s == 0) return false;
  VertexSet seen = bits::single(bits::lowest(s));
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) {
      const int u = bits::lowest(f);
      next |= d.out(u) | d.in(u);
    }
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

bool is_strongly_connected(const Digraph& d) { return induces_strong(d, d.vertices()); }

bool is_acyclic(const Digraph& d) {
  // Repeatedly strip sinks.
  VertexSet left = d.vertices();
  bool progress = true;
  while (left != 0 && progress) {
    progress = false;
    for (VertexSet r = left; r != 0; r &= r - 1) {
      const int v = bits::lowest(r);
      if ((d.out(v) & left) == 0) {
        left &= ~bits::single(v);
        progress = true;
      }
    }
  }
  return left == 0;
}

VertexSet dominating_strong_component(const Tournament& t) { return strong_components(t).components.front(); }

VertexSet dominated_by(const Digraph& d, VertexSet s) {
  VertexSet covered = s;
  for (VertexSet r = s; r != 0; r &= r - 1) covered |= d.out(bits::lowest(r));
  return covered;
}

bool is_dominating_set(const Digraph& d, VertexSet s) { return dominated_by(d, s & d.vertices()) == d.vertices(); }

std::vector<int> hamilton_path(const Tournament& t) {
  std::vector<int> path;
  path.reserve(t.order());
  for (int v = 0; v < t.order(); ++v) {
    if (path.empty() || t.has_arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    // path.front() -> v, so some consecutive pair straddles v unless v goes last.
    std::size_t i = 0;
    while (i + 1 < path.size() && !t.has_arc(v, path[i + 1])) ++i;
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
  }
  return path;
}

std::optional<std::vector<int>> hamilton_cycle(const Tournament& t) {
  const int n = t.order();
  if (n == 1) return std::vector<int>{0};
  if (!is_strongly_connected(t)) return std::nullopt;

  std::vector<int> cycle;
  for (int a = 0; a < n && cycle.empty(); ++a) {
    for (int b : bits::members(t.out(a))) {
      const VertexSet closing = t.out(b) & t.in(a);
      if (closing != 0) {
        cycle = {a, b, bits::lowest(closing)};
        break;
      }
    }
  }
  VertexSet on = bits::from_list(cycle);

  while (static_cast<int>(cycle.size()) < n) {
    bool inserted = false;
    for (int v : bits::members(t.vertices() & ~on)) {
      if ((t.out(v) & on) == 0 || (t.in(v) & on) == 0) continue;
      const std::size_t k = cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (t.has_arc(cycle[i], v) && t.has_arc(v, cycle[(i + 1) % k])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
          break;
        }
      }
      on |= bits::single(v);
      inserted = true;
      break;
    }
    if (inserted) continue;

    // Every outside vertex is either beaten by the whole cycle (A) or beats
    // it (B); strong connectivity supplies an arc A -> B.
    VertexSet beaten = 0;
    VertexSet beating = 0;
    for (int v : bits::members(t.vertices() & ~on)) {
      if ((t.in(v) & on) == on) {
        beaten |= bits::single(v);
      } else {
        beating |= bits::single(v);
      }
    }
    int a = -1;
    int b = -1;
    for (int x : bits::members(beaten)) {
      const VertexSet targets = t.out(x) & beating;
      if (targets != 0) {
        a = x;
        b = bits::lowest(targets);
        break;
      }
    }
    // c0 c1 a b c2 ... : c1 -> a and b -> c2 hold by the A/B split.
    cycle.insert(cycle.begin() + 2, {a, b});
    on |= bits::single(a) | bits::single(b);
  }
  cycle.push_back(cycle.front());
  return cycle;
}

namespace {

bool extend_cycle(const Tournament& t, int anchor, int remaining, VertexSet used, std::vector<int>& path) {
  const int last = path.back();
  if (remaining == 0) return t.has_arc(last, anchor);
  VertexSet candidates = t.out(last) & ~used;
  if (remaining == 1) candidates &= t.in(anchor);
  for (; candidates != 0; candidates &= candidates - 1) {
    const int u = bits::lowest(candidates);
    path.push_back(u);
    if (extend_cycle(t, anchor, remaining - 1, used | bits::single(u), path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> cycle_through_vertex(const Tournament& t, int v, int k) {
  const int n = t.order();
  if (v < 0 || v >= n) throw PreconditionError("vertex out of range");
  if (k < 3 || k > n) {
    throw PreconditionError("cycle length " + std::to_string(k) + " outside [3, " + std::to_string(n) + "]");
  }
  // Only vertices on a common strong component with v can share a cycle.
  const VertexSet zone = reachable_from(t, v, t.vertices()) & reaching(t, v, t.vertices());
  if (bits::count(zone) < k) return std::nullopt;
  std::vector<int> path{v};
  if (!extend_cycle(t, v, k - 1, bits::single(v) | ~zone, path)) return std::nullopt;
  path.push_back(v);
  return path;
}

bool follows_arcs(const Digraph& d, const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] >= d.order() || !d.has_arc(seq[i], seq[i + 1])) return false;
  }
  return true;
}

}  // namespace watchwalk
