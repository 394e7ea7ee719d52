#include "torsorkit/limits.hpp"

#include <cstdlib>
#include <string>

namespace torsorkit {

std::size_t max_dim() {
  if (const char* env = std::getenv("TORSORKIT_MAX_DIM")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0 && v <= 64) return v;
    } catch (...) {
    }
  }
  return 16;
}

std::size_t max_entries() {
  std::size_t d = max_dim(), n = 1;
  for (std::size_t i = 0; i < max_legs(); ++i) n *= d;
  return n;
}

}  // namespace torsorkit
