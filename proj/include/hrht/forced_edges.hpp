#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hrht/instance.hpp"
#include "hrht/schedule.hpp"

namespace hrht {

// Edges that must appear in the output matching; at most one per resident.
using ForcedEdges = std::vector<Edge>;

enum class FeInfeasibleReason {
  forced_edge_deleted,
  deficient_distracting_hospital,
  isolated_distracting_resident,
};

[[nodiscard]] std::string_view to_string(FeInfeasibleReason reason);

struct FeInfeasible {
  FeInfeasibleReason reason;
  std::string detail;
};

struct PruneResult {
  // Surviving edges, with quotas q(h) - |Q(h)| taken from base_quotas.
  Instance pruned;
  // Original quotas, raised to |Q(h)| where they were smaller.
  QuotaVector base_quotas;
  std::vector<Edge> deleted;  // sorted; contains every forced edge
  std::vector<Resident> distracting_residents;
  std::vector<Hospital> distracting_hospitals;
  // Least-preferred hospital of each resident in the pruned instance.
  std::vector<std::optional<Hospital>> last;
  std::vector<int> forced_per_hospital;
};

struct FeSolution {
  QuotaVector quotas;
  Matching matching;
  long long total_increase = 0;  // against the original quotas of the instance
};

using PruneOutcome = std::variant<PruneResult, FeInfeasible>;
using FeOutcome = std::variant<FeSolution, FeInfeasible>;

// Throws InstanceError (not_an_edge / duplicate_entry) for a malformed forced set.
void validate_forced(const Instance& inst, const ForcedEdges& forced);

[[nodiscard]] PruneOutcome prune(const Instance& inst, const ForcedEdges& forced);

// Minimum total augmentation admitting a strongly stable matching that contains
// every forced edge, or the reason none exists. Throws std::logic_error if the
// assembled matching is not strongly stable.
[[nodiscard]] FeOutcome minsum_fe(const Instance& inst, const ForcedEdges& forced,
                                  const Schedule& schedule = {});

}  // namespace hrht
