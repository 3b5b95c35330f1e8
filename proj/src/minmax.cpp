#include "hrht/minmax.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "detail/resident_proposing.hpp"

namespace hrht {

TieBoundError::TieBoundError(std::string hospital, int rank, int tie_length, int ell)
    : std::invalid_argument("hospital " + hospital + " has a tie of length " +
                            std::to_string(tie_length) + " at rank " + std::to_string(rank) +
                            ", exceeding ell + 1 = " + std::to_string(ell + 1) +
                            "; minimum ell is " + std::to_string(tie_length - 1)),
      hospital_(std::move(hospital)),
      rank_(rank),
      tie_length_(tie_length) {}

auto minmax_bt(const Instance& inst, int ell, const Schedule& schedule) -> MinMaxSolution {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  // Report the longest tie so the suggested minimum ell is the true one.
  std::optional<std::tuple<int, Hospital, int>> longest;
  for (Hospital h : inst.hospitals()) {
    const auto& groups = inst.preferences(h);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const int len = static_cast<int>(groups[g].size());
      if (len > ell + 1 && (!longest || len > std::get<0>(*longest)))
        longest.emplace(len, h, static_cast<int>(g) + 1);
    }
  }
  if (longest) {
    const auto [len, h, rank] = *longest;
    throw TieBoundError(inst.name(h), rank, len, ell);
  }

  std::vector<int> temp(static_cast<std::size_t>(inst.num_hospitals()));
  for (Hospital h : inst.hospitals()) temp[h.index()] = inst.quota(h) + ell;
  auto outcome = detail::resident_proposing(inst, QuotaVector(std::move(temp)), schedule);

  const auto loads = outcome.matching.loads(inst.num_hospitals());
  std::vector<int> q(static_cast<std::size_t>(inst.num_hospitals()));
  for (Hospital h : inst.hospitals()) q[h.index()] = std::max(inst.quota(h), loads[h.index()]);

  MinMaxSolution out;
  out.quotas = QuotaVector(std::move(q));
  out.matching = std::move(outcome.matching);
  out.ell = ell;
  out.max_increase = max_increase(inst.quotas(), out.quotas);
  return out;
}

}  // namespace hrht
