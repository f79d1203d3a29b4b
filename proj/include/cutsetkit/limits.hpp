#pragma once

#include <cstddef>

namespace cutsetkit {

/// Guards against runaway inputs. `max_elements` is seeded from the
/// CUTSETKIT_MAX_ELEMENTS environment variable (default 4096);
/// `max_chains` caps maximal-chain and transversal enumerations.
struct Limits {
  std::size_t max_elements = 4096;
  std::size_t max_chains = 1'000'000;
};

const Limits& global_limits();

}  // namespace cutsetkit
