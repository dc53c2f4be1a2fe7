#include "watchwalk/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace watchwalk::limits {

int effective(int builtin) {
  const char* raw = std::getenv("WATCHWALK_MAX_N");
  if (raw == nullptr) return builtin;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value <= 0) return builtin;
    return std::min(builtin, value);
  } catch (const std::exception&) {
    return builtin;
  }
}

}  // namespace watchwalk::limits
