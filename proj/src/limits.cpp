#include "cutsetkit/limits.hpp"

#include <cstdlib>
#include <string>

namespace cutsetkit {

const Limits& global_limits() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("CUTSETKIT_MAX_ELEMENTS")) {
      try {
        long v = std::stol(env);
        if (v > 0) l.max_elements = static_cast<std::size_t>(v);
      } catch (...) {
        // malformed value: keep the default
      }
    }
    return l;
  }();
  return limits;
}

}  // namespace cutsetkit
