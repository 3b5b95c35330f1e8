#pragma once

#include <cstdint>
#include <optional>

namespace hrht {

// Order in which pending agents (free residents, or under-subscribed hospitals)
// are served. Without a seed the queue is FIFO in declared order; with a seed a
// uniformly random pending agent is served next.
struct Schedule {
  std::optional<std::uint64_t> shuffle_seed;
};

}  // namespace hrht
