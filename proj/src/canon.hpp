#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "watchwalk/census.hpp"

namespace watchwalk::detail {

inline constexpr int kSmallMax = 16;

// Compact tournament for the enumeration hot path.
struct SmallTournament {
  int n = 0;
  std::array<std::uint16_t, kSmallMax> out{};
};

SmallTournament compact(const Tournament& t);
Tournament expand(const SmallTournament& t);

struct Canonical {
  CanonicalCode code;
  // Vertices that some optimal leaf places in the last position.
  std::uint32_t last_vertices = 0;
};

Canonical canonize(const SmallTournament& t);

// Canonical code of `t` when vertex `newest` may be the canonically last
// vertex, nullopt otherwise. Rejections usually avoid the full search.
std::optional<CanonicalCode> accept_as_last(const SmallTournament& t, int newest);

// Non-isomorphic one-vertex extensions of `parent` whose new vertex is
// canonically last, ordered by canonical code.
std::vector<SmallTournament> augment(const SmallTournament& parent);

}  // namespace watchwalk::detail
