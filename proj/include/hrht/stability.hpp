#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hrht/instance.hpp"
#include "hrht/schedule.hpp"

namespace hrht {

enum class BlockingNotion { strong, super, weak };

[[nodiscard]] std::string_view to_string(BlockingNotion notion);
[[nodiscard]] std::optional<BlockingNotion> parse_notion(std::string_view text);

struct BlockingPair {
  Resident resident;
  Hospital hospital;
  // The resident h would give up, or nullopt when h still has an empty slot.
  std::optional<Resident> witness;

  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

struct StabilityReport {
  BlockingNotion notion = BlockingNotion::strong;
  std::vector<BlockingPair> pairs;

  [[nodiscard]] bool stable() const { return pairs.empty(); }
};

// All edges outside m that block it under `notion`, in resident-major order.
// An under-subscribed hospital holds quotas[h] - |m(h)| empty slots that every
// neighbour beats. Throws std::invalid_argument if m is not valid for quotas.
[[nodiscard]] StabilityReport blocking_pairs(const Instance& inst, const QuotaVector& quotas,
                                             const Matching& m,
                                             BlockingNotion notion = BlockingNotion::strong);

[[nodiscard]] bool is_strongly_stable(const Instance& inst, const QuotaVector& quotas,
                                      const Matching& m);

// Resident-optimal strongly stable matching under `quotas`, or nullopt if none exists.
[[nodiscard]] std::optional<Matching> solve_strong(const Instance& inst, const QuotaVector& quotas,
                                                   const Schedule& schedule = {});

}  // namespace hrht
