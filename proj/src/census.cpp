#include "watchwalk/census.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "canon.hpp"
#include "watchwalk/io.hpp"
#include "watchwalk/limits.hpp"
#include "watchwalk/version.hpp"
#include "watchwalk/watchman.hpp"

namespace watchwalk {

using detail::SmallTournament;

std::string CanonicalCode::to_string() const {
  std::string text = "T " + std::to_string(n_);
  if (n_ > 1) text += ' ';
  int bit = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++bit) text += ((words_[bit >> 6] >> (63 - (bit & 63))) & 1U) ? '1' : '0';
  }
  return text;
}

Tournament CanonicalCode::tournament() const { return parse_tcode(to_string()); }

CanonicalCode canonical_form(const Tournament& t) {
  const int cap = limits::effective(limits::kCanonicalForm);
  if (t.order() > cap) {
    throw CapacityError("canonical form supports at most " + std::to_string(cap) + " vertices, got " + std::to_string(t.order()));
  }
  return detail::canonize(detail::compact(t)).code;
}

namespace {

void check_enumeration_order(int n) {
  const int cap = limits::effective(limits::kCensusLarge);
  if (n < 1 || n > cap) throw CapacityError("enumeration supports orders 1.." + std::to_string(cap) + ", got " + std::to_string(n));
}

SmallTournament single_vertex() {
  SmallTournament t;
  t.n = 1;
  return t;
}

template <class Visit>
void descend(const SmallTournament& t, int target, Visit& visit) {
  if (t.n == target) {
    visit(t);
    return;
  }
  for (const SmallTournament& child : detail::augment(t)) descend(child, target, visit);
}

std::vector<SmallTournament> level(int n) {
  std::vector<SmallTournament> reps;
  auto keep = [&](const SmallTournament& t) { reps.push_back(t); };
  descend(single_vertex(), n, keep);
  return reps;
}

}  // namespace

void for_each_tournament(int n, const std::function<void(const Tournament&)>& visit) {
  check_enumeration_order(n);
  auto forward = [&](const SmallTournament& t) { visit(detail::expand(t)); };
  descend(single_vertex(), n, forward);
}

std::vector<Tournament> enumerate_tournaments(int n) {
  std::vector<Tournament> all;
  for_each_tournament(n, [&](const Tournament& t) { all.push_back(t); });
  return all;
}

std::int64_t count_tournaments(int n) {
  check_enumeration_order(n);
  std::int64_t count = 0;
  auto tally = [&](const SmallTournament&) { ++count; };
  descend(single_vertex(), n, tally);
  return count;
}

std::vector<CanonicalCode> enumerate_by_dedupe(int n) {
  if (n < 1 || n > 7) throw CapacityError("dedupe enumeration supports orders 1..7");
  std::vector<SmallTournament> reps{single_vertex()};
  for (int order = 2; order <= n; ++order) {
    std::map<CanonicalCode, SmallTournament> classes;
    for (const SmallTournament& parent : reps) {
      for (std::uint32_t mask = 0; mask < (1U << parent.n); ++mask) {
        SmallTournament child;
        child.n = order;
        for (int v = 0; v < parent.n; ++v) {
          child.out[v] = parent.out[v];
          if (((mask >> v) & 1U) == 0) child.out[v] |= static_cast<std::uint16_t>(1U << parent.n);
        }
        child.out[parent.n] = static_cast<std::uint16_t>(mask);
        classes.emplace(detail::canonize(child).code, child);
      }
    }
    reps.clear();
    for (auto& entry : classes) reps.push_back(entry.second);
  }
  std::vector<CanonicalCode> codes;
  for (const SmallTournament& t : reps) codes.push_back(detail::canonize(t).code);
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::int64_t CensusTable::total(int n) const {
  std::int64_t sum = 0;
  for (const auto& [key, count] : rows) {
    if (key.n == n) sum += count;
  }
  return sum;
}

namespace {

void add_profile(CensusRows& rows, int n, const Tournament& t) {
  const TournamentProfile p = tournament_profile(t);
  ++rows[CensusKey{n, p.w, p.gamma, p.multiplicity}];
}

CensusRows run_unit(const SmallTournament& root, int n) {
  CensusRows rows;
  auto profile = [&](const SmallTournament& t) { add_profile(rows, n, detail::expand(t)); };
  descend(root, n, profile);
  return rows;
}

// Checkpoint: a header line, then one line per finished unit:
//   unit <index> <parent tournament code> <w>:<gamma>:<m>:<count>,...
// Only newline-terminated lines are trusted.
std::string checkpoint_header(int n, std::size_t units) {
  return "watchwalk-census-checkpoint v1 n=" + std::to_string(n) + " units=" + std::to_string(units);
}

std::string encode_unit(std::size_t index, const SmallTournament& root, const CensusRows& rows) {
  std::ostringstream line;
  line << "unit " << index << ' ' << to_tcode(detail::expand(root)) << ' ';
  bool first = true;
  for (const auto& [key, count] : rows) {
    if (!first) line << ',';
    first = false;
    line << key.w << ':' << key.gamma << ':' << key.m << ':' << count;
  }
  if (first) line << '-';
  return line.str();
}

std::map<std::size_t, CensusRows> load_checkpoint(const std::string& path, int n, const std::vector<SmallTournament>& roots) {
  std::map<std::size_t, CensusRows> done;
  if (!std::filesystem::exists(path)) return done;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CensusIoError("checkpoint " + path + ": cannot open for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::size_t start = 0;
  bool header_seen = false;
  int lineno = 0;
  for (std::size_t nl = text.find('\n'); nl != std::string::npos; start = nl + 1, nl = text.find('\n', start)) {
    ++lineno;
    const std::string line = text.substr(start, nl - start);
    if (!header_seen) {
      if (line != checkpoint_header(n, roots.size())) {
        throw CensusIoError("checkpoint " + path + ": header does not match this census (expected '" +
                            checkpoint_header(n, roots.size()) + "')");
      }
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    std::string tag, t_tag, rows_text;
    std::size_t index = 0;
    int order = 0;
    std::string pair_bits;
    if (!(ls >> tag >> index >> t_tag >> order) || tag != "unit" || t_tag != "T" || index >= roots.size()) {
      throw CensusIoError("checkpoint " + path + ": malformed line " + std::to_string(lineno));
    }
    if (order > 1) ls >> pair_bits;
    ls >> rows_text;
    const std::string code = "T " + std::to_string(order) + (order > 1 ? " " + pair_bits : "");
    if (code != to_tcode(detail::expand(roots[index]))) {
      throw CensusIoError("checkpoint " + path + ": unit " + std::to_string(index) + " has an unexpected parent");
    }
    CensusRows rows;
    if (rows_text != "-") {
      std::istringstream rs(rows_text);
      std::string item;
      while (std::getline(rs, item, ',')) {
        CensusKey key{n, 0, 0, 0};
        std::int64_t count = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        std::istringstream is(item);
        if (!(is >> key.w >> c1 >> key.gamma >> c2 >> key.m >> c3 >> count) || c1 != ':' || c2 != ':' || c3 != ':') {
          throw CensusIoError("checkpoint " + path + ": malformed rows on line " + std::to_string(lineno));
        }
        rows[key] += count;
      }
    }
    done[index] = std::move(rows);
  }
  return done;
}

}  // namespace

CensusTable census(int n, const CensusOptions& options) {
  const int cap = limits::effective(options.allow_large ? limits::kCensusLarge : limits::kCensusDefault);
  if (n < 1 || n > cap) {
    throw CapacityError("census supports orders 1.." + std::to_string(cap) +
                        (options.allow_large ? "" : " (order 10 needs --allow-large)") + ", got " + std::to_string(n));
  }
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  const std::vector<SmallTournament> roots = level(std::max(1, n - 2));
  std::vector<CensusRows> results(roots.size());
  std::vector<char> finished(roots.size(), 0);

  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    const auto& path = options.checkpoint_path;
    for (auto& [index, rows] : load_checkpoint(path, n, roots)) {
      results[index] = std::move(rows);
      finished[index] = 1;
    }
    // Rewrite with trusted lines only, dropping any torn tail.
    checkpoint.open(path, std::ios::binary | std::ios::trunc);
    if (!checkpoint) throw CensusIoError("checkpoint " + path + ": cannot open for writing");
    checkpoint << checkpoint_header(n, roots.size()) << '\n';
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (finished[i]) checkpoint << encode_unit(i, roots[i], results[i]) << '\n';
    }
    checkpoint.flush();
    if (!checkpoint) throw CensusIoError("checkpoint " + path + ": write failed");
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!finished[i]) pending.push_back(i);
  }

  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
  for (std::int64_t k = 0; k < count; ++k) {
    const std::size_t i = pending[static_cast<std::size_t>(k)];
    try {
      CensusRows rows = run_unit(roots[i], n);
      if (checkpoint.is_open()) {
        const std::string line = encode_unit(i, roots[i], rows);
#pragma omp critical(watchwalk_checkpoint)
        {
          checkpoint << line << '\n';
          checkpoint.flush();
          if (!checkpoint && !failure) {
            failure = std::make_exception_ptr(CensusIoError("checkpoint " + options.checkpoint_path + ": write failed"));
          }
        }
      }
      results[i] = std::move(rows);
    } catch (...) {
#pragma omp critical(watchwalk_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CensusTable table;
  for (const CensusRows& rows : results) {
    for (const auto& [key, c] : rows) table.rows[key] += c;
  }
  table.provenance.engine_version = kVersion;
  table.provenance.threads = options.jobs;
  table.provenance.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return table;
}

CensusTable census_serial(int n) {
  const auto started = std::chrono::steady_clock::now();
  CensusTable table;
  for_each_tournament(n, [&](const Tournament& t) { add_profile(table.rows, n, t); });
  table.provenance.engine_version = kVersion;
  table.provenance.threads = 1;
  table.provenance.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return table;
}

std::string to_csv(const CensusRows& rows) {
  std::ostringstream out;
  out << "n,w,gamma,m,count\n";
  for (const auto& [key, count] : rows) out << key.n << ',' << key.w << ',' << key.gamma << ',' << key.m << ',' << count << '\n';
  return out.str();
}

std::string to_json(const CensusTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, count] : table.rows) {
    rows.push_back({{"n", key.n}, {"w", key.w}, {"gamma", key.gamma}, {"m", key.m}, {"count", count}});
  }
  nlohmann::json doc = {
      {"rows", rows},
      {"provenance",
       {{"engine_version", table.provenance.engine_version},
        {"seconds", table.provenance.seconds},
        {"threads", table.provenance.threads}}},
  };
  return doc.dump(2) + "\n";
}

ReferenceTable parse_reference(const std::string& text) {
  ReferenceTable ref;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (header) {
      if (fields.size() < 5 || fields[0] != "n" || fields[1] != "w" || fields[2] != "gamma" || fields[3] != "m" ||
          fields[4] != "count") {
        throw ParseError(lineno, "reference header must start with n,w,gamma,m,count");
      }
      header = false;
      continue;
    }
    if (fields.size() != 5 && fields.size() != 6) throw ParseError(lineno, "expected 5 or 6 fields");
    std::vector<long long> v;
    for (const auto& field : fields) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (field.empty() || used != field.size()) throw ParseError(lineno, "non-integer field '" + field + "'");
      v.push_back(x);
    }
    const CensusKey key{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), v[3]};
    if (ref.rows.contains(key)) throw ParseError(lineno, "duplicate row");
    if (v[4] < 0) throw ParseError(lineno, "negative count");
    ref.rows[key] = v[4];
    if (v.size() == 6 && v[5] != 0) ref.advisory.insert(key);
  }
  if (header) throw ParseError(0, "reference file has no header");
  return ref;
}

ReferenceTable read_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CensusIoError("reference " + path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_reference(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

bool DiffReport::ok() const {
  return std::none_of(diffs.begin(), diffs.end(), [](const CensusDiff& d) { return !d.advisory; });
}

std::string DiffReport::to_text() const {
  std::ostringstream out;
  for (const auto& d : diffs) {
    out << (d.advisory ? "advisory " : "mismatch ") << "n=" << d.key.n << " w=" << d.key.w << " gamma=" << d.key.gamma
        << " m=" << d.key.m << " computed=" << (d.computed ? std::to_string(*d.computed) : "-")
        << " reference=" << (d.reference ? std::to_string(*d.reference) : "-") << '\n';
  }
  return out.str();
}

DiffReport verify_appendix_a(const CensusTable& table, const ReferenceTable& reference) {
  std::set<int> orders;
  for (const auto& entry : table.rows) orders.insert(entry.first.n);
  std::set<CensusKey> keys;
  for (const auto& entry : table.rows) keys.insert(entry.first);
  for (const auto& entry : reference.rows) {
    if (orders.contains(entry.first.n)) keys.insert(entry.first);
  }
  std::set<int> advisory_orders;
  for (const CensusKey& key : reference.advisory) advisory_orders.insert(key.n);
  DiffReport report;
  for (const CensusKey& key : keys) {
    std::optional<std::int64_t> computed;
    std::optional<std::int64_t> expected;
    if (auto it = table.rows.find(key); it != table.rows.end()) computed = it->second;
    if (auto it = reference.rows.find(key); it != reference.rows.end()) expected = it->second;
    if (computed == expected) continue;
    report.diffs.push_back({key, computed, expected, advisory_orders.contains(key.n)});
  }
  return report;
}

}  // namespace watchwalk
