#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "watchwalk/domination.hpp"
#include "watchwalk/families.hpp"
#include "watchwalk/structure.hpp"

using namespace watchwalk;

namespace {

Digraph random_digraph(int n, std::mt19937_64& gen) {
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && gen() % 3 == 0) rows[u] |= bits::single(v);
    }
  }
  return Digraph(n, rows);
}

std::optional<int> size_of(const std::optional<SetWitness>& w) {
  if (!w) return std::nullopt;
  return w->size;
}

void check_against_oracle(const Digraph& d) {
  const DominationReport r = domination_report(d);
  CHECK(r.gamma.size == oracle::gamma(d));
  CHECK(bits::count(r.gamma.set) == r.gamma.size);
  CHECK(is_dominating_set(d, r.gamma.set));
  CHECK(size_of(r.gamma_t) == oracle::gamma_t(d));
  CHECK(size_of(r.gamma_wc) == oracle::gamma_wc(d));
  CHECK(size_of(r.gamma_sc) == oracle::gamma_sc(d));
  if (r.gamma_sc) CHECK(induces_strong(d, r.gamma_sc->set));
  if (r.gamma_wc) CHECK(induces_weak(d, r.gamma_wc->set));
  CHECK((r.gamma_cyc ? std::optional<int>(r.gamma_cyc->length) : std::nullopt) == oracle::gamma_cyc(d));
  if (r.gamma_cyc) {
    const auto& c = r.gamma_cyc->cycle;
    CHECK(c.front() == c.back());
    CHECK(static_cast<int>(c.size()) == r.gamma_cyc->length + 1);
    CHECK(follows_arcs(d, c));
    CHECK(is_dominating_set(d, bits::from_list(c)));
  }
}

}  // namespace

TEST_CASE("domination variants match subset enumeration on all labelled 5-tournaments") {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) check_against_oracle(oracle::labelled_tournament(5, mask));
}

TEST_CASE("domination variants match subset enumeration on random digraphs") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 300; ++i) check_against_oracle(random_digraph(2 + static_cast<int>(gen() % 8), gen));
}

TEST_CASE("minimum dominating sets are complete and ordered") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 100; ++i) {
    const Digraph d = random_digraph(3 + static_cast<int>(gen() % 6), gen);
    const int gamma = oracle::gamma(d);
    std::vector<VertexSet> expected;
    for (VertexSet s = 1; s <= d.vertices(); ++s) {
      if (bits::count(s) == gamma && oracle::dominates(d, s)) expected.push_back(s);
    }
    auto lex = [](VertexSet a, VertexSet b) { return bits::members(a) < bits::members(b); };
    std::sort(expected.begin(), expected.end(), lex);
    const auto sets = all_minimum_dominating_sets(d);
    CHECK(sets == expected);
    CHECK(domination_number(d).set == sets.front());
  }
}

TEST_CASE("directed 3-cycle") {
  const Digraph c3 = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  const DominationReport r = domination_report(c3);
  CHECK(r.gamma.size == 2);
  CHECK(r.gamma_wc->size == 2);
  // A strongly connected 2-set would need a digon.
  CHECK(r.gamma_sc->size == 3);
  CHECK(r.gamma_t->size == 3);
  CHECK(r.gamma_cyc->length == 3);
}

TEST_CASE("total domination is absent with a source") {
  CHECK_FALSE(total_domination_number(transitive(4)).has_value());
  CHECK(total_domination_number(paley(7))->size == 3);
}

TEST_CASE("path fixture") {
  const Digraph p = fixture("fig1_path");
  const DominationReport r = domination_report(p);
  CHECK(r.gamma.size == 3);
  // {v1,v2,v3,v4} dominates and induces a path.
  CHECK(r.gamma_wc->size == oracle::gamma_wc(p));
  CHECK(r.gamma_wc->size == 4);
  CHECK(r.gamma_wc->set == 0b01111);
  CHECK_FALSE(r.gamma_sc.has_value());
  CHECK_FALSE(r.gamma_cyc.has_value());
}

TEST_CASE("windmill fixture") {
  const Digraph w = fixture("fig2_windmill");
  CHECK(w.order() == 15);
  CHECK(w.arc_count() == 32);
  CHECK(domination_number(w).size == 4);
  using windmill::u;
  using windmill::v;
  const VertexSet named = bits::from_list({v(7), u(1), u(3), u(5)});
  CHECK(is_dominating_set(w, named));
  const auto sc = connected_domination_numbers(w).strong;
  REQUIRE(sc.has_value());
  CHECK(sc->size == 7);
  CHECK(sc->size == oracle::gamma_sc(w));
  const VertexSet blades = bits::from_list({v(1), v(2), v(3), v(4), v(5), v(6), v(7)});
  CHECK(is_dominating_set(w, blades));
  CHECK(induces_strong(w, blades));
}

TEST_CASE("named tournaments") {
  const Tournament p = paley(7);
  CHECK(domination_number(p).size == 3);
  const auto sets = all_minimum_dominating_sets(p);
  CHECK(std::find(sets.begin(), sets.end(), bits::from_list({0, 1, 5})) != sets.end());

  const Tournament c = circulant(7, {1, 2, 3});
  CHECK(domination_number(c).size == 2);
  const auto csets = all_minimum_dominating_sets(c);
  CHECK(std::find(csets.begin(), csets.end(), bits::from_list({0, 4})) != csets.end());
  CHECK(domination_number(c).set == bits::from_list({0, 3}));
}

TEST_CASE("dominating cycle search stays fast on large acyclic and layered inputs") {
  CHECK_FALSE(cycle_domination_number(transitive(64)).has_value());
  // Two strong blocks where only the lower one is reachable from the other.
  std::vector<VertexSet> rows(40, 0);
  for (int u = 0; u < 40; ++u) {
    for (int v = 0; v < 40; ++v) {
      if (u == v) continue;
      const bool same = (u < 20) == (v < 20);
      if (same ? ((v - u + 40) % 20 < 10) : u < 20) rows[u] |= bits::single(v);
    }
  }
  const auto c = cycle_domination_number(Digraph(40, rows));
  REQUIRE(c.has_value());
  CHECK(is_dominating_set(Digraph(40, rows), bits::from_list(c->cycle)));
}
