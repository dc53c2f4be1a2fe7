// Command-line front end: analyze, generate, census, verify, convert.
//
// Exit status: 0 success, 1 property failure or census mismatch, 2 usage,
// parse or capacity error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "watchwalk/census.hpp"
#include "watchwalk/domination.hpp"
#include "watchwalk/families.hpp"
#include "watchwalk/io.hpp"
#include "watchwalk/limits.hpp"
#include "watchwalk/properties.hpp"
#include "watchwalk/structure.hpp"
#include "watchwalk/version.hpp"
#include "watchwalk/watchman.hpp"

using json = nlohmann::ordered_json;
using namespace watchwalk;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Raised for errors that map to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_like_generator(const std::string& s) {
  for (const char* prefix : {"generator:", "fixture:", "transitive:", "paley:", "circulant:", "random:"}) {
    if (s.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

Digraph load_input(const std::string& source) {
  if (source == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_digraph(buffer.str());
  }
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read " + source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return parse_digraph(buffer.str());
    } catch (const ParseError& e) {
      throw ParseError(e.line(), source + ": " + e.what());
    }
  }
  if (looks_like_generator(source)) return from_generator(source);
  if (fixtures().contains(source)) return fixture(source);
  throw UsageError("'" + source + "' is not a file, generator spec or fixture name");
}

json vertex_list(VertexSet s) { return bits::members(s); }

json set_witness(const std::optional<SetWitness>& w) {
  if (!w) return nullptr;
  return vertex_list(w->set);
}

json size_or_null(const std::optional<SetWitness>& w) {
  if (!w) return nullptr;
  return w->size;
}

json analyze_json(const Digraph& d) {
  if (!d.is_tournament() && d.order() > limits::effective(limits::kWalkStateSearch)) {
    throw CapacityError("watchman engine for general digraphs supports at most " +
                        std::to_string(limits::effective(limits::kWalkStateSearch)) + " vertices, got " +
                        std::to_string(d.order()));
  }
  const Condensation c = strong_components(d);
  const DominationReport dom = domination_report(d);
  const WalkReport walk = d.is_tournament() ? watchman_number_tournament(Tournament(d)) : watchman_number(d);

  json out;
  out["n"] = d.order();
  out["arcs"] = d.arc_count();
  out["tournament"] = d.is_tournament();
  json components = json::array();
  for (VertexSet s : c.components) components.push_back(vertex_list(s));
  out["strong_components"] = components;
  json quotient = json::array();
  for (const auto& [u, v] : c.quotient.arcs()) quotient.push_back({u, v});
  out["condensation"] = {{"components", static_cast<int>(c.components.size())}, {"arcs", quotient}};
  out["gamma"] = dom.gamma.size;
  out["gamma_t"] = size_or_null(dom.gamma_t);
  out["gamma_cyc"] = dom.gamma_cyc ? json(dom.gamma_cyc->length) : json(nullptr);
  out["gamma_wc"] = size_or_null(dom.gamma_wc);
  out["gamma_sc"] = size_or_null(dom.gamma_sc);
  out["witnesses"] = {
      {"gamma", vertex_list(dom.gamma.set)},
      {"gamma_t", set_witness(dom.gamma_t)},
      {"gamma_cyc", dom.gamma_cyc ? json(dom.gamma_cyc->cycle) : json(nullptr)},
      {"gamma_wc", set_witness(dom.gamma_wc)},
      {"gamma_sc", set_witness(dom.gamma_sc)},
  };
  out["exists"] = walk.exists;
  out["w"] = walk.w ? json(*walk.w) : json(nullptr);
  out["witness"] = walk.witness ? json(walk.witness->vertices) : json(nullptr);
  out["multiplicity"] = walk.multiplicity ? json(*walk.multiplicity) : json(nullptr);
  return out;
}

std::string render_value(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].dump();
    return s;
  }
  return v.dump();
}

std::string analyze_human(const json& report) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) { out << std::left << std::setw(18) << key << value << '\n'; };
  row("vertices", render_value(report["n"]));
  row("arcs", render_value(report["arcs"]));
  row("tournament", render_value(report["tournament"]));
  std::string comps;
  for (const auto& c : report["strong_components"]) comps += (comps.empty() ? "{" : " {") + render_value(c) + "}";
  row("strong comps", comps);
  row("condensation", render_value(report["condensation"]["components"]) + " components, " +
                          std::to_string(report["condensation"]["arcs"].size()) + " arcs");
  for (const char* key : {"gamma", "gamma_t", "gamma_cyc", "gamma_wc", "gamma_sc"}) {
    const json& witness = report["witnesses"][key];
    row(key, render_value(report[key]) + (witness.is_null() ? "" : "  [" + render_value(witness) + "]"));
  }
  row("walk exists", render_value(report["exists"]));
  row("w", render_value(report["w"]));
  row("witness", render_value(report["witness"]));
  row("multiplicity", render_value(report["multiplicity"]));
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CensusIoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw CensusIoError("write to " + path + " failed");
}

std::string default_reference() {
  const std::string local = "data/appendixA.csv";
  if (std::filesystem::is_regular_file(local)) return local;
  return std::string(WATCHWALK_DATA_DIR) + "/appendixA.csv";
}

std::string format_digraph(const Digraph& d, const std::string& to) {
  if (to == "tcode") {
    if (!d.is_tournament()) throw UsageError("tournament code requested for a digraph that is not a tournament");
    return to_tcode(Tournament(d)) + "\n";
  }
  return write_edge_list(d);
}

json property_json(const PropertyResult& r, const PropertyOptions& o) {
  return {
      {"property", r.name},
      {"pass", r.pass},
      {"checked", r.checked},
      {"min_n", o.min_n},
      {"max_n", o.max_n},
      {"seed", o.seed},
      {"samples", o.samples},
      {"detail", r.detail},
      {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Watchman's walks and domination in tournaments and digraphs"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string input;
  bool human = false;
  auto* analyze = app.add_subcommand("analyze", "Domination numbers and watchman's walk of one digraph");
  analyze->add_option("input", input, "File, '-', generator spec or fixture name")->required();
  analyze->add_flag("--human", human, "Text table instead of JSON");

  std::string gen_spec;
  std::string gen_to = "edge-list";
  auto* generate = app.add_subcommand("generate", "Write a generated digraph");
  generate->add_option("spec", gen_spec, "transitive:N, paley:Q, circulant:N:S1,S2,..., random:N:SEED or fixture:NAME")->required();
  generate->add_option("--to", gen_to, "Output format")->check(CLI::IsMember({"edge-list", "tcode"}));

  int census_n = 0;
  int jobs = 1;
  std::string checkpoint;
  std::string out_path;
  std::string format = "csv";
  bool allow_large = false;
  std::string reference;
  auto* census_cmd = app.add_subcommand("census", "Watchman census of all tournaments of one order");
  census_cmd->add_option("-n", census_n, "Order")->required();
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--checkpoint", checkpoint, "Resume file for completed work units");
  census_cmd->add_option("--out", out_path, "Output file (default stdout)");
  census_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_flag("--allow-large", allow_large, "Permit order 10");
  auto* verify_opt = census_cmd->add_option("--verify", reference, "Compare against a reference table")
                         ->expected(0, 1);

  std::string property;
  int prop_n = -1;
  int prop_min_n = -1;
  std::uint64_t seed = 1;
  int samples = -1;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("property", property, "Suite name");
  verify->add_option("--n", prop_n, "Largest order of the enumerated corpus")->check(CLI::Range(1, 12));
  verify->add_option("--min-n", prop_min_n, "Smallest order of the enumerated corpus (default: --n)")->check(CLI::Range(1, 12));
  verify->add_option("--seed", seed, "Seed for randomized instances");
  verify->add_option("--samples", samples, "Randomized instance count (default: suite-specific)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--list", list, "List suite names");

  std::string conv_input;
  std::string conv_to;
  auto* convert = app.add_subcommand("convert", "Convert between edge-list and tournament-code formats");
  convert->add_option("input", conv_input, "File, '-', generator spec or fixture name")->required();
  convert->add_option("--to", conv_to, "Target format")->required()->check(CLI::IsMember({"edge-list", "tcode"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      const json report = analyze_json(load_input(input));
      std::cout << (human ? analyze_human(report) : report.dump(2) + "\n");
      return kOk;
    }
    if (*generate) {
      std::cout << format_digraph(from_generator(gen_spec), gen_to);
      return kOk;
    }
    if (*convert) {
      std::cout << format_digraph(load_input(conv_input), conv_to);
      return kOk;
    }
    if (*census_cmd) {
      CensusOptions options;
      options.jobs = jobs;
      options.checkpoint_path = checkpoint;
      options.allow_large = allow_large;
      const CensusTable table = census(census_n, options);
      write_output(out_path, format == "json" ? to_json(table) : to_csv(table.rows));
      if (verify_opt->count() > 0) {
        const std::string path = reference.empty() ? default_reference() : reference;
        const DiffReport diff = verify_appendix_a(table, read_reference(path));
        std::cerr << diff.to_text();
        std::cerr << "verified order " << census_n << " against " << path << ": " << (diff.ok() ? "match" : "MISMATCH") << " ("
                  << diff.diffs.size() << " differing row(s))\n";
        return diff.ok() ? kOk : kFailure;
      }
      return kOk;
    }
    if (*verify) {
      if (list) {
        for (const auto& name : property_names()) std::cout << name << '\n';
        return kOk;
      }
      if (property.empty()) throw UsageError("verify needs a property name (see --list)");
      PropertyOptions options;
      if (prop_n > 0) options.max_n = prop_n;
      options.min_n = prop_min_n > 0 ? prop_min_n : options.max_n;
      if (options.min_n > options.max_n) throw UsageError("--min-n exceeds --n");
      options.seed = seed;
      options.samples = samples;
      const PropertyResult result = run_property(property, options);
      std::cout << property_json(result, options).dump(2) << '\n';
      return result.pass ? kOk : kFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error" << (e.line() > 0 ? " at line " + std::to_string(e.line()) : std::string()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity limit: " << e.what() << '\n';
    return kUsage;
  } catch (const CensusIoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
