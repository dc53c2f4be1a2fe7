#pragma once

namespace watchwalk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace watchwalk
