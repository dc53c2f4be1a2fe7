#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "watchwalk/digraph.hpp"

namespace watchwalk {

/// Pair bits of a relabelled tournament, packed most-significant first. Two
/// codes compare like their tournament-code bit strings.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(int n, std::array<std::uint64_t, 2> words) : n_(n), words_(words) {}

  int order() const { return n_; }
  /// Tournament-code text, e.g. "T 3 110".
  std::string to_string() const;
  Tournament tournament() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

/// Label-independent code: equal exactly for isomorphic tournaments. Built
/// by degree-refinement plus individualisation, taking the least code over
/// all leaves of the search tree. Throws CapacityError beyond
/// limits::kCanonicalForm vertices.
CanonicalCode canonical_form(const Tournament& t);

/// One representative per isomorphism class, by canonical augmentation: a
/// child is kept only when its newest vertex can be the canonically last one.
void for_each_tournament(int n, const std::function<void(const Tournament&)>& visit);
std::vector<Tournament> enumerate_tournaments(int n);
std::int64_t count_tournaments(int n);

/// Reference enumeration for n <= 7: every one-vertex extension of every
/// smaller representative, canonicalised and deduplicated.
std::vector<CanonicalCode> enumerate_by_dedupe(int n);

struct CensusKey {
  int n = 0;
  int w = 0;
  int gamma = 0;
  std::int64_t m = 0;

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

using CensusRows = std::map<CensusKey, std::int64_t>;

struct CensusTable {
  CensusRows rows;
  struct Provenance {
    std::string engine_version;
    double seconds = 0.0;
    int threads = 1;
  } provenance;

  std::int64_t total(int n) const;
};

/// I/O failure on a census checkpoint or output file; the message names the path.
class CensusIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  int jobs = 1;
  /// Empty for no checkpointing. Completed work units found in an existing
  /// file are reused.
  std::string checkpoint_path;
  /// Permit n = limits::kCensusLarge.
  bool allow_large = false;
};

/// Aggregates (w, gamma, multiplicity) over all classes of order n. Work
/// units are the subtrees below the representatives of order n-2 and run in
/// parallel; the resulting rows do not depend on `jobs`.
CensusTable census(int n, const CensusOptions& options = {});

/// Single-threaded reference: enumerate, profile, aggregate.
CensusTable census_serial(int n);

/// Header `n,w,gamma,m,count`; rows sorted by key.
std::string to_csv(const CensusRows& rows);
std::string to_json(const CensusTable& table);

/// Transcribed reference table. Rows whose optional sixth column is 1 are
/// advisory: mismatches there are reported but do not fail verification.
struct ReferenceTable {
  CensusRows rows;
  std::set<CensusKey> advisory;
};

/// Throws std::runtime_error with a line number on malformed input.
ReferenceTable read_reference(const std::string& path);
ReferenceTable parse_reference(const std::string& text);

struct CensusDiff {
  CensusKey key;
  std::optional<std::int64_t> computed;
  std::optional<std::int64_t> reference;
  bool advisory = false;
};

struct DiffReport {
  std::vector<CensusDiff> diffs;
  /// No mismatches outside advisory rows.
  bool ok() const;
  std::string to_text() const;
};

/// Compares every order present in `table` against the reference rows of
/// the same order.
DiffReport verify_appendix_a(const CensusTable& table, const ReferenceTable& reference);

}  // namespace watchwalk
