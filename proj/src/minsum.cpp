#include "hrht/minsum.hpp"

#include <algorithm>

#include "detail/pending.hpp"

namespace hrht {

auto minsum_augment(const Instance& inst, const Schedule& schedule) -> MinSumSolution {
  const auto nh = static_cast<std::size_t>(inst.num_hospitals());
  Matching m(inst.num_residents());
  std::vector<int> load(nh, 0);
  std::vector<std::size_t> next_group(nh, 0);
  std::vector<bool> queued(nh, false);

  auto wants_to_propose = [&](Hospital h) {
    return load[h.index()] < inst.quota(h) && next_group[h.index()] < inst.preferences(h).size();
  };

  detail::PendingQueue queue(schedule);
  for (Hospital h : inst.hospitals()) {
    if (wants_to_propose(h)) {
      queue.push(h.value());
      queued[h.index()] = true;
    }
  }

  while (!queue.empty()) {
    const Hospital h{queue.pop()};
    queued[h.index()] = false;
    if (!wants_to_propose(h)) continue;

    const auto& group = inst.preferences(h)[next_group[h.index()]++];
    for (Resident r : group) {
      const auto current = m.partner(r);
      if (current && *inst.rank(r, *current) <= *inst.rank(r, h)) continue;
      if (current) {
        const Hospital left = *current;
        --load[left.index()];
        if (!queued[left.index()] && wants_to_propose(left)) {
          queue.push(left.value());
          queued[left.index()] = true;
        }
      }
      m.assign(r, h);
      ++load[h.index()];
    }
    if (!queued[h.index()] && wants_to_propose(h)) {
      queue.push(h.value());
      queued[h.index()] = true;
    }
  }

  MinSumSolution out;
  std::vector<int> q(nh);
  for (Hospital h : inst.hospitals()) {
    q[h.index()] = std::max(inst.quota(h), load[h.index()]);
    (load[h.index()] < inst.quota(h) ? out.under_hospitals : out.full_hospitals).push_back(h);
  }
  out.quotas = QuotaVector(std::move(q));
  out.total_increase = total_increase(inst.quotas(), out.quotas);
  for (Resident r : inst.residents()) {
    if (auto h = m.partner(r)) {
      out.matched_residents.push_back(r);
      if (load[h->index()] < inst.quota(*h)) out.matched_to_under.push_back(r);
    }
  }
  out.matching = std::move(m);
  return out;
}

}  // namespace hrht
