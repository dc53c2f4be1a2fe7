#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "watchwalk/census.hpp"
#include "watchwalk/families.hpp"
#include "watchwalk/io.hpp"
#include "watchwalk/watchman.hpp"

using namespace watchwalk;

namespace {

Tournament relabel(const Digraph& t, const std::vector<int>& perm) {
  std::vector<VertexSet> rows(t.order(), 0);
  for (int u = 0; u < t.order(); ++u) {
    for (int v : bits::members(t.out(u))) rows[perm[u]] |= bits::single(perm[v]);
  }
  return Tournament(Digraph(t.order(), rows));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("watchwalk_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Known numbers of tournaments up to isomorphism.
const std::int64_t kClasses[] = {0, 1, 1, 2, 4, 12, 56, 456, 6880, 191536, 9733056};

}  // namespace

TEST_CASE("canonical form separates exactly the isomorphism classes of labelled tournaments") {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, std::set<CanonicalCode>> by_brute;
    std::map<CanonicalCode, std::set<std::string>> by_code;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Digraph t = oracle::labelled_tournament(n, mask);
      const std::string brute = oracle::brute_canonical(t);
      const CanonicalCode code = canonical_form(Tournament(t));
      by_brute[brute].insert(code);
      by_code[code].insert(brute);
    }
    CHECK(static_cast<std::int64_t>(by_brute.size()) == kClasses[n]);
    CHECK(by_code.size() == by_brute.size());
    for (const auto& entry : by_brute) CHECK(entry.second.size() == 1);
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(gen() % 11);
    const Tournament t = random_tournament(n, gen());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    const CanonicalCode code = canonical_form(t);
    CHECK(code == canonical_form(relabel(t, perm)));
    // The code describes a tournament isomorphic to the input.
    CHECK(canonical_form(code.tournament()) == code);
  }
}

TEST_CASE("canonical form agrees with brute force on random order-6 pairs") {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 150; ++i) {
    const Digraph a = oracle::labelled_tournament(6, gen() & 0x7fff);
    const Digraph b = oracle::labelled_tournament(6, gen() & 0x7fff);
    const bool iso = oracle::brute_canonical(a) == oracle::brute_canonical(b);
    CHECK(iso == (canonical_form(Tournament(a)) == canonical_form(Tournament(b))));
  }
}

TEST_CASE("canonical form capacity") {
  CHECK_THROWS_AS(canonical_form(transitive(13)), CapacityError);
  CHECK(canonical_form(transitive(1)).to_string() == "T 1");
}

TEST_CASE("class counts") {
  for (int n = 1; n <= 8; ++n) CHECK(count_tournaments(n) == kClasses[n]);
}

TEST_CASE("canonical augmentation agrees with extend-and-deduplicate") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<CanonicalCode> augmented;
    for_each_tournament(n, [&](const Tournament& t) { augmented.push_back(canonical_form(t)); });
    std::sort(augmented.begin(), augmented.end());
    CHECK(std::adjacent_find(augmented.begin(), augmented.end()) == augmented.end());
    std::vector<CanonicalCode> deduped = enumerate_by_dedupe(n);
    std::sort(deduped.begin(), deduped.end());
    CHECK(augmented == deduped);
  }
  CHECK_THROWS_AS(enumerate_by_dedupe(8), CapacityError);
}

TEST_CASE("enumeration order is deterministic") {
  const auto first = enumerate_tournaments(6);
  const auto second = enumerate_tournaments(6);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}

TEST_CASE("census agrees with the serial reference") {
  for (int n = 1; n <= 7; ++n) {
    const CensusTable serial = census_serial(n);
    CHECK(serial.total(n) == kClasses[n]);
    CensusOptions options;
    options.jobs = 3;
    const CensusTable parallel = census(n, options);
    CHECK(parallel.rows == serial.rows);
    CHECK(parallel.provenance.threads == 3);
  }
}

TEST_CASE("census rows at order 7") {
  const CensusRows rows = census(7).rows;
  CHECK(rows.at(CensusKey{7, 0, 1, 1}) == 56);
  CHECK(rows.at(CensusKey{7, 3, 2, 14}) == 1);
  CHECK(rows.at(CensusKey{7, 3, 3, 7}) == 1);
  CHECK(rows.size() == 16);
  std::int64_t w3g2 = 0;
  for (const auto& [key, count] : rows) {
    if (key.w == 3 && key.gamma == 2) w3g2 += count;
  }
  CHECK(w3g2 == 399);
}

TEST_CASE("census csv and json") {
  const CensusTable table = census(4);
  CHECK(to_csv(table.rows) == "n,w,gamma,m,count\n4,0,1,1,2\n4,3,2,1,1\n4,3,2,2,1\n");
  const auto doc = nlohmann::json::parse(to_json(table));
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["count"] == 2);
  CHECK(doc["provenance"]["engine_version"].is_string());
}

TEST_CASE("census gates") {
  CHECK_THROWS_AS(census(10), CapacityError);
  CensusOptions large;
  large.allow_large = true;
  CHECK_THROWS_AS(census(11, large), CapacityError);
  CHECK_THROWS_AS(census(0), CapacityError);
  CensusOptions zero;
  zero.jobs = 0;
  CHECK_THROWS(census(5, zero));
}

TEST_CASE("environment cap lowers limits") {
  ::setenv("WATCHWALK_MAX_N", "6", 1);
  CHECK_THROWS_AS(census(7), CapacityError);
  CHECK_THROWS_AS(canonical_form(transitive(7)), CapacityError);
  CHECK_NOTHROW(census(6));
  ::setenv("WATCHWALK_MAX_N", "40", 1);
  CHECK_THROWS_AS(census(10), CapacityError);
  ::unsetenv("WATCHWALK_MAX_N");
}

TEST_CASE("checkpoint resume") {
  const auto path = temp_file("ckpt");
  std::filesystem::remove(path);
  CensusOptions options;
  options.checkpoint_path = path.string();
  const CensusRows expected = census_serial(7).rows;
  CHECK(census(7, options).rows == expected);
  const std::string full = slurp(path);
  CHECK(full.rfind("watchwalk-census-checkpoint v1 n=7", 0) == 0);

  // Cut the file inside a unit line: the partial line is ignored and redone.
  const std::size_t cut = full.size() / 2;
  {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << full.substr(0, cut);
  }
  CHECK(census(7, options).rows == expected);
  CHECK(slurp(path).size() == full.size());

  // A completed checkpoint is reused as is.
  CHECK(census(7, options).rows == expected);

  // A checkpoint for another order is rejected.
  CensusOptions other = options;
  CHECK_THROWS_AS(census(6, other), CensusIoError);
  std::filesystem::remove(path);

  CensusOptions bad;
  bad.checkpoint_path = "/nonexistent-dir/ckpt";
  CHECK_THROWS_AS(census(5, bad), CensusIoError);
}

TEST_CASE("reference table parsing and diffs") {
  const std::string text =
      "n,w,gamma,m,count,advisory\n"
      "4,0,1,1,2,0\n"
      "4,3,2,1,1,0\n"
      "4,3,2,2,1,0\n"
      "5,0,1,1,4,1\n";
  const ReferenceTable ref = parse_reference(text);
  CHECK(ref.rows.size() == 4);
  CHECK(ref.advisory.size() == 1);

  CensusTable table = census(4);
  CHECK(verify_appendix_a(table, ref).ok());
  CHECK(verify_appendix_a(table, ref).diffs.empty());

  table.rows[CensusKey{4, 3, 2, 2}] = 2;
  const DiffReport bad = verify_appendix_a(table, ref);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.diffs.size() == 1);
  CHECK(bad.diffs[0].computed == 2);
  CHECK(bad.diffs[0].reference == 1);
  CHECK(bad.to_text().find("mismatch n=4") != std::string::npos);

  // Mismatches at an advisory order are reported without failing.
  CensusTable five;
  five.rows[CensusKey{5, 0, 1, 1}] = 3;
  const DiffReport advisory = verify_appendix_a(five, ref);
  CHECK(advisory.ok());
  CHECK(advisory.diffs.size() == 1);

  CHECK_THROWS_AS(parse_reference("n,w,gamma,m,count\n4,0,1,x,2\n"), ParseError);
  CHECK_THROWS_AS(parse_reference("n,w,gamma,m,count\n4,0,1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_reference("a,b\n"), ParseError);
}

TEST_CASE("shipped reference table sums to the class counts") {
  const ReferenceTable ref = read_reference(WATCHWALK_DATA_DIR "/appendixA.csv");
  std::map<int, std::int64_t> totals;
  for (const auto& [key, count] : ref.rows) totals[key.n] += count;
  for (int n = 2; n <= 10; ++n) CHECK(totals[n] == kClasses[n]);
  for (const CensusKey& key : ref.advisory) CHECK(key.n == 10);
}
