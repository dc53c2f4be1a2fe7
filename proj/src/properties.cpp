#include "watchwalk/properties.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "watchwalk/census.hpp"
#include "watchwalk/families.hpp"
#include "watchwalk/io.hpp"
#include "watchwalk/structure.hpp"

namespace watchwalk {

namespace {

std::string describe(const Digraph& d) {
  if (d.is_tournament()) return to_tcode(Tournament(d));
  std::string text = write_edge_list(d);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  bool failed() const { return !result_.pass; }

  // Records the first failure only.
  void expect(bool ok, const Digraph& d, const std::string& what) {
    ++result_.checked;
    if (ok || failed()) return;
    result_.pass = false;
    result_.detail = what;
    result_.counterexample = describe(d);
  }

  void note(const std::string& text) {
    if (!failed()) result_.detail = text;
  }

  PropertyResult finish() { return result_; }

 private:
  PropertyResult result_;
};

int samples_or(const PropertyOptions& o, int fallback) { return o.samples < 0 ? fallback : o.samples; }

// Calls visit on every class with order in [max(lo, min_n), max_n].
template <class Visit>
void each_class(const PropertyOptions& o, int lo, Visit&& visit) {
  for (int n = std::max(lo, o.min_n); n <= o.max_n; ++n) for_each_tournament(n, visit);
}

std::vector<Tournament> random_tournaments(std::uint64_t seed, int count, int lo, int hi) {
  std::mt19937_64 gen(seed);
  std::vector<Tournament> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    out.push_back(random_tournament(n, gen()));
  }
  return out;
}

PropertyResult domset(const PropertyOptions& o, const Engines& e) {
  Check c("domset");
  auto test = [&](const Tournament& t) {
    if (c.failed()) return;
    const int gamma = e.gamma(t).size;
    const WalkReport r = e.walk(t);
    if (gamma == 1) {
      c.expect(r.w == 0, t, "gamma = 1 but w = " + std::to_string(r.w.value_or(-1)));
      return;
    }
    c.expect(r.w == gamma || r.w == gamma + 1, t,
             "w = " + std::to_string(r.w.value_or(-1)) + " outside {gamma, gamma+1} with gamma = " + std::to_string(gamma));
  };
  each_class(o, 1, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 200), 3, 12)) test(t);
  return c.finish();
}

PropertyResult nminustwo(const PropertyOptions& o, const Engines& e) {
  Check c("nminustwo");
  auto test = [&](const Tournament& t) {
    if (c.failed() || t.order() < 5 || !is_strongly_connected(t)) return;
    const WalkReport r = e.walk(t);
    c.expect(r.w && *r.w <= t.order() - 2, t, "strong tournament with w = " + std::to_string(r.w.value_or(-1)) + " > n-2");
  };
  each_class(o, 5, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 0), 5, 12)) test(t);
  return c.finish();
}

PropertyResult gammacyc(const PropertyOptions& o, const Engines& e) {
  Check c("gammacyc");
  auto test = [&](const Tournament& t) {
    if (c.failed()) return;
    const WalkReport r = e.walk(t);
    const auto cyc = cycle_domination_number(t);
    if (r.w == 0) {
      // A dominating vertex is a source, so no cycle can dominate it.
      c.expect(!cyc.has_value(), t, "dominating cycle alongside a dominating vertex");
      return;
    }
    c.expect(cyc && cyc->length == r.w, t,
             "gamma_cyc = " + (cyc ? std::to_string(cyc->length) : std::string("absent")) + " but w = " + std::to_string(r.w.value_or(-1)));
  };
  each_class(o, 1, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 200), 3, 12)) test(t);
  return c.finish();
}

PropertyResult gammat_chain(const PropertyOptions& o, const Engines& e) {
  Check c("gammat-chain");
  auto test = [&](const Tournament& t) {
    if (c.failed()) return;
    const WalkReport r = e.walk(t);
    if (r.w.value_or(0) < 1) return;
    const int gamma = e.gamma(t).size;
    const auto total = total_domination_number(t);
    c.expect(total && gamma <= total->size && total->size <= *r.w, t,
             "gamma = " + std::to_string(gamma) + ", gamma_t = " + (total ? std::to_string(total->size) : std::string("absent")) +
                 ", w = " + std::to_string(*r.w));
  };
  each_class(o, 1, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 200), 3, 12)) test(t);
  return c.finish();
}

PropertyResult norepeat(const PropertyOptions& o, const Engines& e) {
  Check c("norepeat");
  auto test = [&](const Tournament& t) {
    if (c.failed()) return;
    const WalkReport r = e.walk(t);
    const bool ok = r.witness && (r.witness->length() == 0 || r.witness->length() == r.witness->distinct_vertices());
    c.expect(ok, t, "witness walk repeats a vertex");
  };
  each_class(o, 1, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 200), 3, 12)) test(t);
  return c.finish();
}

PropertyResult engines(const PropertyOptions& o, const Engines& e) {
  Check c("engines");
  auto test = [&](const Tournament& t) {
    if (c.failed()) return;
    const WalkReport generic = e.walk(t);
    const TournamentProfile fast = e.profile(t);
    c.expect(generic.exists && generic.w == fast.w && generic.multiplicity == fast.multiplicity && generic.witness == fast.witness, t,
             "generic (w=" + std::to_string(generic.w.value_or(-1)) + ", m=" + std::to_string(generic.multiplicity.value_or(-1)) +
                 ") vs tournament path (w=" + std::to_string(fast.w) + ", m=" + std::to_string(fast.multiplicity) + ")");
  };
  each_class(o, 1, test);
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 200), 3, 12)) test(t);
  return c.finish();
}

PropertyResult simple_w03(const PropertyOptions& o, const Engines& e) {
  Check c("simple-w03");
  std::int64_t simple = 0;
  each_class(o, 1, [&](const Tournament& t) {
    if (c.failed() || !is_simple(t)) return;
    ++simple;
    const WalkReport r = e.walk(t);
    c.expect(r.w == 0 || r.w == 3, t, "simple tournament with w = " + std::to_string(r.w.value_or(-1)));
  });
  c.note(std::to_string(simple) + " simple tournaments");
  return c.finish();
}

// Circulants of odd order whose connection set makes them locally in- or
// out-transitive.
std::vector<Tournament> locally_transitive_circulants(int max_order) {
  std::vector<Tournament> found;
  for (int n = 3; n <= max_order; n += 2) {
    const int half = (n - 1) / 2;
    for (std::uint32_t choice = 0; choice < (1U << half); ++choice) {
      std::vector<int> steps;
      for (int s = 1; s <= half; ++s) steps.push_back(((choice >> (s - 1)) & 1U) ? n - s : s);
      Tournament t = circulant(n, steps);
      const auto flags = local_transitivity(t);
      if (flags.in || flags.out) found.push_back(std::move(t));
    }
  }
  return found;
}

PropertyResult local_transitive(const PropertyOptions& o, const Engines& e) {
  Check c("local-transitive");
  auto test = [&](const Tournament& t, bool exact_walk) {
    if (c.failed()) return;
    const auto flags = local_transitivity(t);
    if (!flags.in && !flags.out) return;
    const int gamma = e.gamma(t).size;
    const int w = exact_walk ? e.walk(t).w.value_or(-1) : e.profile(t).w;
    c.expect(gamma <= 3 && w <= 3 && w >= 0, t, "locally transitive with gamma = " + std::to_string(gamma) + ", w = " + std::to_string(w));
  };
  each_class(o, 1, [&](const Tournament& t) { test(t, true); });
  const auto pool = locally_transitive_circulants(25);
  std::mt19937_64 gen(o.seed);
  const int count = samples_or(o, 300);
  for (int i = 0; i < count && !pool.empty(); ++i) {
    const Tournament& t = pool[gen() % pool.size()];
    test(t, t.order() <= 12);
  }
  return c.finish();
}

PropertyResult spanning_bound(const PropertyOptions& o, const Engines& e) {
  Check c("spanning-bound");
  std::mt19937_64 gen(o.seed);
  const int count = samples_or(o, 200);
  const int lo = std::max(3, std::min(o.min_n, o.max_n));
  const int hi = std::max(lo, std::min(o.max_n, 12));
  std::int64_t compared = 0;
  for (int i = 0; i < count && !c.failed(); ++i) {
    const int n = lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    const Tournament t = random_tournament(n, gen());
    // Drop each arc with probability 1/4.
    std::vector<VertexSet> rows(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v : bits::members(t.out(u))) {
        if ((gen() & 3U) != 0) rows[u] |= bits::single(v);
      }
    }
    const Digraph sub(n, rows);
    const WalkReport rs = e.walk(sub);
    if (!rs.exists) continue;
    ++compared;
    const WalkReport rt = e.walk(t);
    c.expect(rt.w && *rt.w <= *rs.w, t,
             "w(T) = " + std::to_string(rt.w.value_or(-1)) + " exceeds w(T') = " + std::to_string(*rs.w) + " for T' = " + describe(sub));
  }
  c.note(std::to_string(compared) + " spanning subdigraphs with a walk");
  return c.finish();
}

PropertyResult strongify_suite(const PropertyOptions& o, const Engines& e) {
  Check c("strongify");
  std::mt19937_64 gen(o.seed);
  const int wanted = samples_or(o, 50);
  int built = 0;
  for (int attempt = 0; built < wanted && attempt < 100000 && !c.failed(); ++attempt) {
    const int n = 7 + static_cast<int>(gen() % 7);
    Tournament base = random_tournament(n, gen());
    if (e.gamma(base).size != 3) continue;
    // One to three sinks make it non-strong without changing gamma.
    const int sinks = 1 + static_cast<int>(gen() % 3);
    for (int s = 0; s < sinks; ++s) base = add_sink(base);
    ++built;
    const Tournament strong = strongify(base);
    bool contains = true;
    for (int v = 0; v < base.order(); ++v) contains = contains && (strong.out(v) & base.vertices()) == base.out(v);
    c.expect(strong.order() == base.order() + 1 && is_strongly_connected(strong) && contains &&
                 e.gamma(strong).size == 3 && hamilton_cycle(strong).has_value(),
             base, "strongify output not strong, not a supertournament, or gamma changed");
  }
  c.note(std::to_string(built) + " non-strong gamma = 3 inputs");
  if (built < wanted && !c.failed()) c.expect(false, transitive(1), "could only derive " + std::to_string(built) + " instances");
  return c.finish();
}

// Dominators U in B that privately dominate A through a bijection; nullopt if none.
std::optional<VertexSet> private_dominators(const Digraph& d, VertexSet side_a) {
  const VertexSet side_b = d.vertices() & ~side_a;
  const std::vector<int> b = bits::members(side_b);
  for (std::uint32_t pick = 1; pick < (1U << b.size()); ++pick) {
    VertexSet u = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if ((pick >> i) & 1U) u |= bits::single(b[i]);
    }
    if (bits::count(u) != bits::count(side_a)) continue;
    bool ok = true;
    VertexSet hit = 0;
    for (int a : bits::members(side_a)) {
      const VertexSet by = d.in(a) & u;
      ok = ok && bits::count(by) == 1;
      hit |= by;
    }
    if (ok && hit == u) return u;
  }
  return std::nullopt;
}

PropertyResult multipartite_exists(const PropertyOptions& o, const Engines& e) {
  Check c("multipartite-exists");
  std::mt19937_64 gen(o.seed);
  const int wanted = samples_or(o, 100);
  int no_source = 0;
  int with_source = 0;
  int bipartite = 0;
  for (int attempt = 0; attempt < 200000 && !c.failed() && (no_source < wanted || bipartite < wanted / 2); ++attempt) {
    const int parts = 2 + static_cast<int>(gen() % 2);
    std::vector<int> sizes;
    for (int p = 0; p < parts; ++p) sizes.push_back(1 + static_cast<int>(gen() % 4));
    const PartitionSpec spec(sizes);
    const Digraph d = random_orientation(spec, gen());
    int source = -1;
    for (int v = 0; v < d.order(); ++v) {
      if (d.in(v) == 0) source = v;
    }
    const WalkReport r = e.walk(d);
    c.expect(r.exists == has_watchman_walk(d), d, "walk engine and component test disagree on existence");
    if (source < 0) {
      if (no_source < wanted) {
        ++no_source;
        c.expect(r.exists, d, "no source vertex but no watchman's walk");
      }
    } else {
      ++with_source;
      int part_size = 0;
      for (int p = 0; p < parts; ++p) {
        if (bits::contains(spec.part(p), source)) part_size = sizes[p];
      }
      c.expect(r.exists == (part_size == 1), d, "source in a part of size " + std::to_string(part_size) + " but exists = " + (r.exists ? "true" : "false"));
    }
    if (parts == 2 && source < 0 && bipartite < wanted / 2) {
      // Side A is the smaller part (ties: the first).
      const VertexSet side_a = sizes[0] <= sizes[1] ? spec.part(0) : spec.part(1);
      if (const auto u = private_dominators(d, side_a); u && bits::count(side_a) >= 2) {
        ++bipartite;
        const Walk walk = bipartite_walk_construction(d, side_a, *u);
        const int bound = 2 * bits::count(side_a);
        c.expect(is_closed_dominating_walk(d, walk) && walk.length() == bound && r.w && *r.w <= bound, d,
                 "bipartite construction failed or w = " + std::to_string(r.w.value_or(-1)) + " > 2|A| = " + std::to_string(bound));
      }
    }
  }
  c.note(std::to_string(no_source) + " source-free orientations, " + std::to_string(with_source) + " with a source, " +
         std::to_string(bipartite) + " bipartite constructions");
  if (!c.failed() && (no_source < wanted || bipartite < wanted / 2)) {
    c.expect(false, transitive(1), "sampling budget exhausted before reaching the requested instance counts");
  }
  return c.finish();
}

PropertyResult pancyclic(const PropertyOptions& o, const Engines&) {
  Check c("pancyclic");
  each_class(o, 3, [&](const Tournament& t) {
    if (c.failed() || !is_strongly_connected(t)) return;
    for (int v = 0; v < t.order(); ++v) {
      for (int k = 3; k <= t.order(); ++k) {
        const auto cyc = cycle_through_vertex(t, v, k);
        const bool ok = cyc && static_cast<int>(cyc->size()) == k + 1 && cyc->front() == v && follows_arcs(t, *cyc) &&
                        bits::count(bits::from_list(*cyc)) == k;
        c.expect(ok, t, "vertex " + std::to_string(v) + " on no " + std::to_string(k) + "-cycle");
      }
    }
  });
  return c.finish();
}

PropertyResult gamma_bounds(const PropertyOptions& o, const Engines& e) {
  Check c("gamma-bounds");
  each_class(o, 1, [&](const Tournament& t) {
    if (c.failed()) return;
    const int gamma = e.gamma(t).size;
    if (t.order() < 7) {
      c.expect(gamma <= 2, t, "gamma = " + std::to_string(gamma) + " on fewer than 7 vertices");
    } else if (t.order() == 7 && gamma == 3) {
      c.expect(canonical_form(t) == canonical_form(paley(7)), t, "order-7 tournament with gamma = 3 other than Paley(7)");
    } else {
      c.expect(gamma <= 3, t, "gamma = " + std::to_string(gamma) + " on fewer than 19 vertices");
    }
  });
  for (const auto& t : random_tournaments(o.seed, samples_or(o, 500), 7, 18)) {
    if (c.failed()) break;
    const int gamma = e.gamma(t).size;
    c.expect(gamma <= 3, t, "gamma = " + std::to_string(gamma) + " on fewer than 19 vertices");
  }
  return c.finish();
}

PropertyResult existence(const PropertyOptions& o, const Engines& e) {
  Check c("existence");
  std::mt19937_64 gen(o.seed);
  const int count = samples_or(o, 300);
  for (int i = 0; i < count && !c.failed(); ++i) {
    const int n = 2 + static_cast<int>(gen() % 9);
    std::vector<VertexSet> rows(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && gen() % 3 == 0) rows[u] |= bits::single(v);
      }
    }
    const Digraph d(n, rows);
    const WalkReport r = e.walk(d);
    c.expect(r.exists == has_watchman_walk(d), d, "existence test disagrees with exhaustive walk search");
    bool has_source = false;
    for (int v = 0; v < n; ++v) has_source = has_source || d.in(v) == 0;
    if (has_source) c.expect(source_criterion(d) == r.exists, d, "source criterion disagrees with walk search");
  }
  return c.finish();
}

PropertyResult cycle_orientations(const PropertyOptions& o, const Engines& e) {
  Check c("cycle-orientations");
  // From order 4 on a source cannot dominate the cycle, so only the two
  // directed cycles qualify.
  for (int n = std::max(4, o.min_n); n <= std::max(4, std::min(o.max_n, 12)); ++n) {
    int with_walk = 0;
    Digraph last;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if ((mask >> i) & 1U) {
          arcs.emplace_back(i, j);
        } else {
          arcs.emplace_back(j, i);
        }
      }
      last = Digraph::from_arcs(n, arcs);
      if (e.walk(last).exists) ++with_walk;
    }
    c.expect(with_walk == 2, last, std::to_string(with_walk) + " orientations of C" + std::to_string(n) + " have a walk");
  }
  return c.finish();
}

using Suite = PropertyResult (*)(const PropertyOptions&, const Engines&);

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"domset", domset},
      {"nminustwo", nminustwo},
      {"gammacyc", gammacyc},
      {"gammat-chain", gammat_chain},
      {"norepeat", norepeat},
      {"engines", engines},
      {"simple-w03", simple_w03},
      {"local-transitive", local_transitive},
      {"spanning-bound", spanning_bound},
      {"strongify", strongify_suite},
      {"multipartite-exists", multipartite_exists},
      {"pancyclic", pancyclic},
      {"gamma-bounds", gamma_bounds},
      {"existence", existence},
      {"cycle-orientations", cycle_orientations},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : suites()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

PropertyResult run_property(const std::string& name, const PropertyOptions& options, const Engines& engines) {
  const auto& table = suites();
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown property '" + name + "'");
  if (options.min_n < 1 || options.max_n < options.min_n) throw std::invalid_argument("invalid order range");
  return it->second(options, engines);
}

}  // namespace watchwalk
