#pragma once

#include <cstdint>
#include <optional>

#include "msolids/magic.hpp"

namespace msolids::reference {

// Serial reference enumerator kept for testing: plain backtracking in vertex
// index order with no sharding, no face-selection heuristic and no bound
// propagation; only completed faces are checked. Slow but independent of the
// optimized kernel's search order.
std::uint64_t count_labelings(const MagicProblem& p,
                              std::optional<int> pin_vertex = std::nullopt,
                              std::uint64_t* nodes = nullptr);

}  // namespace msolids::reference
