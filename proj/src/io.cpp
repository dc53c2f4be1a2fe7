#include "watchwalk/io.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace watchwalk {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Reads exactly the integers on one line; rejects trailing junk.
std::vector<long long> line_integers(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<long long> values;
  long long x = 0;
  while (ss >> x) values.push_back(x);
  if (!ss.eof()) throw ParseError(lineno, "expected integers, got '" + line + "'");
  return values;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(0, "empty input");
  const auto header = line_integers(line, lineno);
  if (header.size() != 2) throw ParseError(lineno, "header must be 'n m'");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1) throw ParseError(lineno, "vertex count must be positive");
  if (n > kMaxVertices) {
    throw CapacityError("line " + std::to_string(lineno) + ": vertex count " + std::to_string(n) +
                        " exceeds cap " + std::to_string(kMaxVertices));
  }
  if (m < 0 || m > n * (n - 1)) throw ParseError(lineno, "arc count out of range");

  std::vector<VertexSet> rows(n, 0);
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError(lineno + 1, "missing arc line (" + std::to_string(i) + " of " + std::to_string(m) + " read)");
    const auto uv = line_integers(line, lineno);
    if (uv.size() != 2) throw ParseError(lineno, "arc line must be 'u v'");
    const long long u = uv[0];
    const long long v = uv[1];
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
    if (u == v) throw ParseError(lineno, "loop arc");
    if (bits::contains(rows[u], static_cast<int>(v))) throw ParseError(lineno, "duplicate arc");
    rows[u] |= bits::single(static_cast<int>(v));
  }
  if (next_line()) throw ParseError(lineno, "trailing content after " + std::to_string(m) + " arcs");
  return Digraph(static_cast<int>(n), rows);
}

std::string write_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_tcode(const Tournament& t) {
  std::string code = "T " + std::to_string(t.order());
  if (t.order() > 1) code += ' ';
  for (int i = 0; i < t.order(); ++i) {
    for (int j = i + 1; j < t.order(); ++j) code += t.has_arc(i, j) ? '1' : '0';
  }
  return code;
}

Tournament parse_tcode(const std::string& text) {
  std::istringstream ss(text);
  std::string tag;
  long long n = 0;
  std::string bitstr;
  if (!(ss >> tag) || tag != "T") throw ParseError(1, "tournament code must start with 'T'");
  if (!(ss >> n)) throw ParseError(1, "missing order in tournament code");
  if (n < 1) throw ParseError(1, "order must be positive");
  if (n > kMaxVertices) throw CapacityError("tournament order " + std::to_string(n) + " exceeds cap");
  ss >> bitstr;
  std::string rest;
  if (ss >> rest) throw ParseError(1, "trailing content in tournament code");
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  if (bitstr.size() != pairs) {
    throw ParseError(1, "expected " + std::to_string(pairs) + " bits, got " + std::to_string(bitstr.size()));
  }
  std::vector<VertexSet> rows(n, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const char c = bitstr[k];
      if (c == '1') {
        rows[i] |= bits::single(j);
      } else if (c == '0') {
        rows[j] |= bits::single(i);
      } else {
        throw ParseError(1, std::string("invalid bit '") + c + "'");
      }
    }
  }
  return Tournament(Digraph(static_cast<int>(n), rows));
}

Digraph parse_digraph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'T') return parse_tcode(text);
    break;
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace watchwalk
