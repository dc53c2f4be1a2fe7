#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "watchwalk/census.hpp"
#include "watchwalk/domination.hpp"
#include "watchwalk/families.hpp"
#include "watchwalk/io.hpp"
#include "watchwalk/structure.hpp"
#include "watchwalk/watchman.hpp"

using namespace watchwalk;

TEST_CASE("transitive and paley generators") {
  const Tournament t = transitive(5);
  CHECK(score_sequence(t).scores() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(is_acyclic(t));
  const Tournament p = paley(7);
  for (int v = 0; v < 7; ++v) CHECK(p.out(v) == bits::from_list({(v + 1) % 7, (v + 2) % 7, (v + 4) % 7}));
  CHECK(paley(3) == circulant(3, {1}));
  CHECK_THROWS(paley(5));
  CHECK_THROWS(paley(9));
  CHECK(paley(59).order() == 59);
}

TEST_CASE("circulant validation") {
  CHECK_THROWS(circulant(7, {1, 2}));
  CHECK_THROWS(circulant(7, {1, 6, 2}));
  CHECK_THROWS(circulant(7, {0, 1, 2}));
  CHECK(circulant(7, {1, 2, 3}).is_tournament());
}

TEST_CASE("random tournaments are reproducible") {
  CHECK(random_tournament(12, 99) == random_tournament(12, 99));
  CHECK_FALSE(random_tournament(12, 99) == random_tournament(12, 100));
  CHECK(to_tcode(random_tournament(4, 0)) == to_tcode(random_tournament(4, 0)));
}

TEST_CASE("multipartite orientations") {
  const PartitionSpec spec({2, 3, 1});
  CHECK(spec.total() == 6);
  CHECK(spec.part(1) == 0b011100);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_multipartite_orientation(random_orientation(spec, seed), spec));
  CHECK_FALSE(is_multipartite_orientation(transitive(6), spec));
  CHECK_THROWS(PartitionSpec({3}));
  CHECK_THROWS(PartitionSpec({2, 0}));
}

TEST_CASE("score sequences") {
  CHECK_NOTHROW(ScoreSequence({1, 1, 1}));
  CHECK_THROWS(ScoreSequence({0, 0, 3}));
  CHECK_THROWS(ScoreSequence({2, 1, 0}));
  CHECK_THROWS(ScoreSequence({0, 0, 1}));
  CHECK(score_sequence(paley(7)) == ScoreSequence({3, 3, 3, 3, 3, 3, 3}));
}

TEST_CASE("sources and sinks") {
  const Tournament p = paley(7);
  const Tournament s = add_source(p);
  CHECK(s.order() == 8);
  CHECK(s.out(7) == bits::full(7));
  const Tournament k = add_sink(p);
  CHECK(k.in(7) == bits::full(7));
  CHECK(dominating_strong_component(k) == bits::full(7));
}

TEST_CASE("strongify") {
  const Tournament base = add_sink(paley(7));
  const Tournament s = strongify(base);
  CHECK(s.order() == 9);
  CHECK(is_strongly_connected(s));
  CHECK(domination_number(s).size == 3);
  CHECK(domination_number(s).size == oracle::gamma(s));
  CHECK(s.induced(base.vertices()) == base);
  CHECK(hamilton_cycle(s).has_value());
  CHECK_THROWS_AS(strongify(transitive(5)), PreconditionError);
  CHECK_THROWS_AS(strongify(paley(7)), PreconditionError);
}

TEST_CASE("simple tournaments") {
  CHECK(is_simple(transitive(6)));
  CHECK(is_simple(paley(3)));
  CHECK(is_simple(circulant(5, {1, 2})));
  CHECK_FALSE(is_simple(paley(7)));
  // A 4-cycle-bearing strong 4-tournament has scores (1,1,2,2).
  int strong_four = 0;
  for_each_tournament(4, [&](const Tournament& t) {
    if (is_strongly_connected(t)) {
      ++strong_four;
      CHECK(is_simple(t));
    }
  });
  CHECK(strong_four == 1);
}

TEST_CASE("local transitivity") {
  CHECK(local_transitivity(circulant(7, {1, 2, 3})).both());
  CHECK(local_transitivity(transitive(6)).both());
  CHECK_FALSE(local_transitivity(paley(7)).in);
  CHECK_FALSE(local_transitivity(paley(7)).out);
  // Direct definition on random tournaments.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tournament t = random_tournament(7, seed);
    bool in = true;
    bool out = true;
    for (int v = 0; v < 7; ++v) {
      in = in && (t.in(v) == 0 || is_acyclic(t.induced(t.in(v))));
      out = out && (t.out(v) == 0 || is_acyclic(t.induced(t.out(v))));
    }
    CHECK(local_transitivity(t).in == in);
    CHECK(local_transitivity(t).out == out);
  }
}

TEST_CASE("bipartite walk construction") {
  // A = {0,1}, B = {2,3}; 2->0, 3->1 privately, and 0->3, 1->2 close the walk.
  const Digraph d = Digraph::from_arcs(4, {{2, 0}, {3, 1}, {0, 3}, {1, 2}});
  const Walk w = bipartite_walk_construction(d, 0b0011, 0b1100);
  CHECK(w.length() == 4);
  CHECK(is_closed_dominating_walk(d, w));
  CHECK(watchman_number(d).w == 4);

  // With |A| = 1 some vertex is a source.
  const Digraph k12 = Digraph::from_arcs(3, {{1, 0}, {0, 2}});
  CHECK_THROWS_AS(bipartite_walk_construction(k12, 0b001, 0b010), PreconditionError);
  CHECK_FALSE(watchman_number(k12).exists);
  CHECK_THROWS_AS(bipartite_walk_construction(d, 0b0011, 0b0100), PreconditionError);
}

TEST_CASE("smallest bipartite instance for the construction has |A| >= 2") {
  // Every orientation of K_{1,1} and K_{1,2} has a source.
  for (int b = 1; b <= 2; ++b) {
    const PartitionSpec spec({1, b});
    for (std::uint32_t mask = 0; mask < (1U << b); ++mask) {
      std::vector<std::pair<int, int>> arcs;
      for (int j = 0; j < b; ++j) {
        if ((mask >> j) & 1U) {
          arcs.emplace_back(0, 1 + j);
        } else {
          arcs.emplace_back(1 + j, 0);
        }
      }
      const Digraph d = Digraph::from_arcs(1 + b, arcs);
      bool sourceless = true;
      for (int v = 0; v < d.order(); ++v) sourceless = sourceless && d.in(v) != 0;
      CHECK_FALSE(sourceless);
    }
  }
}

TEST_CASE("fixtures and generator strings") {
  CHECK(fixtures().size() == 4);
  CHECK(fixture("fig_paley7") == paley(7));
  CHECK(fixture("fig_unique14") == circulant(7, {1, 2, 3}));
  CHECK_THROWS(fixture("nope"));
  CHECK(from_generator("transitive:4") == transitive(4));
  CHECK(from_generator("generator:paley:7") == paley(7));
  CHECK(from_generator("circulant:7:1,2,3") == circulant(7, {1, 2, 3}));
  CHECK(from_generator("random:9:5") == random_tournament(9, 5));
  CHECK(from_generator("fixture:fig1_path") == fixture("fig1_path"));
  CHECK_THROWS(from_generator("transitive"));
  CHECK_THROWS(from_generator("transitive:x"));
  CHECK_THROWS(from_generator("cube:3"));
  CHECK_THROWS_AS(from_generator("transitive:65"), CapacityError);
}
