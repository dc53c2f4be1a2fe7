#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "watchwalk/digraph.hpp"

namespace watchwalk {

/// Malformed text input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list format: first line "n m", then m lines "u v" (arc u->v), 0-indexed.
Digraph read_edge_list(std::istream& in);
std::string write_edge_list(const Digraph& d);

// Tournament code: "T n b1b2..." with one bit per pair (i,j), i<j, in
// row-major order; '1' means i->j.
std::string to_tcode(const Tournament& t);
Tournament parse_tcode(const std::string& text);

/// Accepts either format; a leading 'T' selects the tournament code.
Digraph parse_digraph(const std::string& text);

}  // namespace watchwalk
