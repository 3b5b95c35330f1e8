#pragma once

#include <cstdint>
#include <optional>

#include "hrht/instance.hpp"

namespace hrht {

struct RandomInstanceParams {
  int residents = 4;
  int hospitals = 3;
  double density = 0.5;  // probability that a pair is an edge
  int max_tie = 2;       // longest tie in a hospital list
  int quota_min = 1;
  int quota_max = 2;
  std::optional<int> max_edges;  // random edges are dropped beyond this
};

// Deterministic for a fixed seed. Names are r1.. and h1.. in declared order.
[[nodiscard]] Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

}  // namespace hrht
