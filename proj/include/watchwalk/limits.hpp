#pragma once

namespace watchwalk::limits {

// Built-in engine caps. The WATCHWALK_MAX_N environment variable can lower
// any of them but never raise one.
inline constexpr int kWalkStateSearch = 24;
inline constexpr int kClosedWalkTargets = 20;
inline constexpr int kCanonicalForm = 12;
inline constexpr int kCensusDefault = 9;
inline constexpr int kCensusLarge = 10;

/// min(builtin, WATCHWALK_MAX_N) when the variable holds a positive integer.
int effective(int builtin);

}  // namespace watchwalk::limits
