#include "watchwalk/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "watchwalk/domination.hpp"
#include "watchwalk/structure.hpp"

namespace watchwalk {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

Tournament from_rows(int n, const std::vector<VertexSet>& rows) { return Tournament(Digraph(n, rows)); }

}  // namespace

PartitionSpec::PartitionSpec(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("a multipartite graph needs at least two parts");
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  }
  if (total() > kMaxVertices) throw CapacityError("partition exceeds " + std::to_string(kMaxVertices) + " vertices");
}

int PartitionSpec::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

VertexSet PartitionSpec::part(int i) const {
  int start = 0;
  for (int j = 0; j < i; ++j) start += sizes_[j];
  return bits::full(start + sizes_[i]) & ~bits::full(start);
}

ScoreSequence::ScoreSequence(std::vector<int> scores) : scores_(std::move(scores)) {
  if (!std::is_sorted(scores_.begin(), scores_.end())) throw std::invalid_argument("score sequence must be non-decreasing");
  long long prefix = 0;
  for (std::size_t k = 0; k < scores_.size(); ++k) {
    prefix += scores_[k];
    const long long need = static_cast<long long>(k + 1) * static_cast<long long>(k) / 2;
    if (prefix < need) throw std::invalid_argument("score sequence violates Landau's condition at position " + std::to_string(k + 1));
  }
  const long long n = static_cast<long long>(scores_.size());
  if (prefix != n * (n - 1) / 2) throw std::invalid_argument("score sequence must sum to n(n-1)/2");
}

Tournament transitive(int n) {
  check_size(n);
  std::vector<VertexSet> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = bits::full(n) & ~bits::full(i + 1);
  return from_rows(n, rows);
}

Tournament paley(int q) {
  if (!is_prime(q) || q % 4 != 3) throw std::invalid_argument("paley order must be a prime congruent to 3 mod 4");
  if (q > 61) throw CapacityError("paley order must be at most 61");
  std::vector<int> residues;
  for (int x = 1; x < q; ++x) {
    const int r = (x * x) % q;
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
  }
  return circulant(q, residues);
}

Tournament circulant(int n, const std::vector<int>& connection) {
  check_size(n);
  VertexSet steps = 0;
  for (int s : connection) {
    if (s < 1 || s >= n) throw std::invalid_argument("connection step " + std::to_string(s) + " outside 1..n-1");
    steps |= bits::single(s);
  }
  for (int s = 1; s < n; ++s) {
    if (bits::contains(steps, s) == bits::contains(steps, n - s)) {
      throw std::invalid_argument("connection set must contain exactly one of " + std::to_string(s) + " and " +
                                  std::to_string(n - s));
    }
  }
  std::vector<VertexSet> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int s : bits::members(steps)) rows[i] |= bits::single((i + s) % n);
  }
  return from_rows(n, rows);
}

Tournament random_tournament(int n, std::uint64_t seed) {
  check_size(n);
  std::mt19937_64 gen(seed);
  std::vector<VertexSet> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (gen() >> 63) {
        rows[i] |= bits::single(j);
      } else {
        rows[j] |= bits::single(i);
      }
    }
  }
  return from_rows(n, rows);
}

Digraph random_orientation(const PartitionSpec& spec, std::uint64_t seed) {
  const int n = spec.total();
  std::vector<int> part_of(n);
  for (int p = 0; p < static_cast<int>(spec.sizes().size()); ++p) {
    for (int v : bits::members(spec.part(p))) part_of[v] = p;
  }
  std::mt19937_64 gen(seed);
  std::vector<VertexSet> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[i] == part_of[j]) continue;
      if (gen() >> 63) {
        rows[i] |= bits::single(j);
      } else {
        rows[j] |= bits::single(i);
      }
    }
  }
  return Digraph(n, rows);
}

Tournament add_source(const Tournament& t) {
  const int n = t.order();
  check_size(n + 1);
  std::vector<VertexSet> rows(n + 1);
  for (int v = 0; v < n; ++v) rows[v] = t.out(v);
  rows[n] = bits::full(n);
  return from_rows(n + 1, rows);
}

Tournament add_sink(const Tournament& t) {
  const int n = t.order();
  check_size(n + 1);
  std::vector<VertexSet> rows(n + 1);
  for (int v = 0; v < n; ++v) rows[v] = t.out(v) | bits::single(n);
  rows[n] = 0;
  return from_rows(n + 1, rows);
}

Tournament strongify(const Tournament& t) {
  if (is_strongly_connected(t)) throw PreconditionError("strongify needs a tournament that is not strong");
  if (domination_number(t).size < 3) throw PreconditionError("strongify needs domination number at least 3");
  const int n = t.order();
  check_size(n + 1);
  const int first = hamilton_path(t).front();
  std::vector<VertexSet> rows(n + 1);
  for (int v = 0; v < n; ++v) rows[v] = t.out(v) | (v == first ? 0 : bits::single(n));
  rows[n] = bits::single(first);
  return from_rows(n + 1, rows);
}

ScoreSequence score_sequence(const Tournament& t) {
  std::vector<int> scores(t.order());
  for (int v = 0; v < t.order(); ++v) scores[v] = t.out_degree(v);
  std::sort(scores.begin(), scores.end());
  return ScoreSequence(scores);
}

bool is_simple(const Tournament& t) {
  static const std::vector<std::vector<int>> allowed = {{0}, {1, 1, 1}, {1, 1, 2, 2}, {2, 2, 2, 2, 2}};
  for (VertexSet comp : strong_components(t).components) {
    std::vector<int> scores;
    for (int v : bits::members(comp)) scores.push_back(bits::count(t.out(v) & comp));
    std::sort(scores.begin(), scores.end());
    if (std::find(allowed.begin(), allowed.end(), scores) == allowed.end()) return false;
  }
  return true;
}

LocalTransitivity local_transitivity(const Tournament& t) {
  LocalTransitivity flags{true, true};
  for (int v = 0; v < t.order(); ++v) {
    if (flags.in && t.in(v) != 0 && !is_acyclic(t.induced(t.in(v)))) flags.in = false;
    if (flags.out && t.out(v) != 0 && !is_acyclic(t.induced(t.out(v)))) flags.out = false;
  }
  return flags;
}

bool is_multipartite_orientation(const Digraph& d, const PartitionSpec& spec) {
  if (d.order() != spec.total()) return false;
  for (int p = 0; p < static_cast<int>(spec.sizes().size()); ++p) {
    const VertexSet part = spec.part(p);
    const VertexSet others = d.vertices() & ~part;
    for (int v : bits::members(part)) {
      if (((d.out(v) | d.in(v)) & part) != 0) return false;
      if ((d.out(v) & d.in(v)) != 0) return false;
      if ((d.out(v) | d.in(v)) != others) return false;
    }
  }
  return true;
}

Walk bipartite_walk_construction(const Digraph& d, VertexSet side_a, VertexSet dominators) {
  const VertexSet all = d.vertices();
  side_a &= all;
  const VertexSet side_b = all & ~side_a;
  for (int v = 0; v < d.order(); ++v) {
    const VertexSet own = bits::contains(side_a, v) ? side_a : side_b;
    const VertexSet other = all & ~own;
    if (((d.out(v) | d.in(v)) & own) != 0 || (d.out(v) & d.in(v)) != 0 || (d.out(v) | d.in(v)) != other) {
      throw PreconditionError("digraph is not an orientation of the complete bipartite graph on the given sides");
    }
    if (d.in(v) == 0) throw PreconditionError("every vertex needs an in-neighbour");
  }
  if (bits::count(side_a) > bits::count(side_b)) throw PreconditionError("side A must not be larger than side B");
  if ((dominators & ~side_b) != 0) throw PreconditionError("dominators must lie in side B");

  const std::vector<int> a_vertices = bits::members(side_a);
  std::vector<int> dominator_of;
  VertexSet used = 0;
  for (int a : a_vertices) {
    const VertexSet by = d.in(a) & dominators;
    if (bits::count(by) != 1) {
      throw PreconditionError("vertex " + std::to_string(a) + " is not dominated by exactly one chosen vertex");
    }
    dominator_of.push_back(bits::lowest(by));
    used |= by;
  }
  if (used != dominators || bits::count(dominators) != static_cast<int>(a_vertices.size())) {
    throw PreconditionError("each chosen vertex must privately dominate exactly one vertex of side A");
  }
  // With one vertex in A that vertex beats all of B and has no in-neighbour,
  // so this only rejects an empty side.
  if (a_vertices.size() < 2) throw PreconditionError("construction needs |A| >= 2");

  Walk walk;
  for (std::size_t i = 0; i < a_vertices.size(); ++i) {
    walk.vertices.push_back(dominator_of[i]);
    walk.vertices.push_back(a_vertices[i]);
  }
  walk.vertices.push_back(dominator_of.front());
  return walk;
}

const std::map<std::string, Digraph>& fixtures() {
  static const std::map<std::string, Digraph> table = [] {
    std::map<std::string, Digraph> m;
    m.emplace("fig1_path", Digraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));

    using windmill::u;
    using windmill::v;
    std::vector<std::pair<int, int>> arcs = {
        {v(7), v(1)}, {v(1), v(2)}, {v(2), v(7)},  // blades
        {v(7), v(3)}, {v(3), v(4)}, {v(4), v(7)},
        {v(7), v(5)}, {v(5), v(6)}, {v(6), v(7)},
    };
    for (int i = 1; i <= 8; ++i) arcs.emplace_back(u(i), u(i % 8 + 1));
    for (int i = 1; i <= 7; ++i) arcs.emplace_back(v(i), u(i));
    arcs.emplace_back(v(7), u(8));
    for (int i = 1; i <= 6; ++i) arcs.emplace_back(u(i), v(i + 1));
    arcs.emplace_back(u(8), v(1));
    m.emplace("fig2_windmill", Digraph::from_arcs(15, arcs));

    m.emplace("fig_paley7", paley(7));
    m.emplace("fig_unique14", circulant(7, {1, 2, 3}));
    return m;
  }();
  return table;
}

const Digraph& fixture(const std::string& name) {
  const auto& all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

long long to_integer(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw std::invalid_argument("bad number '" + text + "' in generator '" + spec + "'");
  return value;
}

}  // namespace

Digraph from_generator(const std::string& spec) {
  std::string body = spec;
  if (body.rfind("generator:", 0) == 0) body = body.substr(10);
  const auto parts = split(body, ':');
  if (parts.empty()) throw std::invalid_argument("empty generator spec");
  const std::string& kind = parts[0];
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) throw std::invalid_argument("generator '" + spec + "' expects " + std::to_string(count - 1) + " parameter(s)");
  };
  auto order = [&](const std::string& text) {
    const long long n = to_integer(text, spec);
    if (n < 1 || n > kMaxVertices) throw CapacityError("order " + text + " outside [1, " + std::to_string(kMaxVertices) + "]");
    return static_cast<int>(n);
  };
  if (kind == "transitive") {
    expect(2);
    return transitive(order(parts[1]));
  }
  if (kind == "paley") {
    expect(2);
    return paley(static_cast<int>(to_integer(parts[1], spec)));
  }
  if (kind == "circulant") {
    expect(3);
    std::vector<int> steps;
    for (const auto& s : split(parts[2], ',')) steps.push_back(static_cast<int>(to_integer(s, spec)));
    return circulant(order(parts[1]), steps);
  }
  if (kind == "random") {
    expect(3);
    const long long seed = to_integer(parts[2], spec);
    if (seed < 0) throw std::invalid_argument("seed must be non-negative");
    return random_tournament(order(parts[1]), static_cast<std::uint64_t>(seed));
  }
  if (kind == "fixture") {
    expect(2);
    return fixture(parts[1]);
  }
  throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace watchwalk
