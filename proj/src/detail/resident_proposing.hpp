#pragma once

#include <vector>

#include "hrht/instance.hpp"
#include "hrht/schedule.hpp"

namespace hrht::detail {

struct ProposalOutcome {
  Matching matching;
  std::vector<bool> full;
};

// Resident-proposing deferred acceptance with whole-rank rejection, run against
// the working capacities `capacity`. Shared by the strong-stability decision
// procedure and the bounded-tie MinMax augmentation.
[[nodiscard]] ProposalOutcome resident_proposing(const Instance& inst, const QuotaVector& capacity,
                                                 const Schedule& schedule);

}  // namespace hrht::detail
