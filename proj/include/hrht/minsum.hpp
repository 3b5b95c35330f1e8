#pragma once

#include <vector>

#include "hrht/instance.hpp"
#include "hrht/schedule.hpp"

namespace hrht {

struct MinSumSolution {
  QuotaVector quotas;  // max(q(h), |M'(h)|)
  Matching matching;
  long long total_increase = 0;
  std::vector<Resident> matched_residents;  // declared order
  std::vector<Hospital> under_hospitals;    // |M'(h)| < q(h)
  std::vector<Hospital> full_hospitals;     // the rest
  std::vector<Resident> matched_to_under;   // matched residents sitting at under_hospitals
};

// Hospital-proposing augmentation with minimum total quota increase. An
// under-subscribed hospital proposes to its whole next rank group; a resident
// switches only to a strictly better hospital. Quotas are then lifted to the
// final loads. Works whether or not `inst` already admits a strongly stable matching.
[[nodiscard]] MinSumSolution minsum_augment(const Instance& inst, const Schedule& schedule = {});

}  // namespace hrht
