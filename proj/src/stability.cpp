#include "hrht/stability.hpp"

#include <algorithm>

#include "detail/pending.hpp"
#include "detail/resident_proposing.hpp"

namespace hrht {

auto to_string(BlockingNotion notion) -> std::string_view {
  switch (notion) {
    case BlockingNotion::strong: return "strong";
    case BlockingNotion::super: return "super";
    case BlockingNotion::weak: return "weak";
  }
  return "strong";
}

auto parse_notion(std::string_view text) -> std::optional<BlockingNotion> {
  if (text == "strong") return BlockingNotion::strong;
  if (text == "super") return BlockingNotion::super;
  if (text == "weak") return BlockingNotion::weak;
  return std::nullopt;
}

namespace {

enum class Pref { worse, equal, better };

// How r rates h against its current partner (nullopt partner = bottom).
auto resident_view(const Instance& inst, Resident r, Hospital h, std::optional<Hospital> current)
    -> Pref {
  if (current == h) return Pref::equal;
  if (!current) return Pref::better;
  return *inst.rank(r, h) < *inst.rank(r, *current) ? Pref::better : Pref::worse;
}

}  // namespace

auto blocking_pairs(const Instance& inst, const QuotaVector& quotas, const Matching& m,
                    BlockingNotion notion) -> StabilityReport {
  require_valid(inst, quotas, m);
  StabilityReport report{notion, {}};
  const auto loads = m.loads(inst.num_hospitals());

  for (Resident r : inst.residents()) {
    for (Hospital h : inst.preferences(r)) {
      if (m.partner(r) == h) continue;
      const Pref side_r = resident_view(inst, r, h, m.partner(r));
      if (side_r == Pref::worse) continue;

      const bool has_slot = loads[h.index()] < quotas[h];
      const int rank_r = *inst.rank(h, r);
      // Hospital side: does h strictly / weakly prefer r to somebody it holds?
      bool strict = has_slot;
      bool weak = has_slot;
      std::optional<Resident> strict_witness;
      std::optional<Resident> weak_witness;
      int strict_rank = -1;
      int weak_rank = -1;
      for (Resident other : m.residents_at(h)) {
        const int rank_o = *inst.rank(h, other);
        if (rank_r < rank_o) {
          strict = true;
          if (rank_o > strict_rank) strict_rank = rank_o, strict_witness = other;
        }
        if (rank_r <= rank_o) {
          weak = true;
          if (rank_o > weak_rank) weak_rank = rank_o, weak_witness = other;
        }
      }

      // Strict resident lists: r never ranks h equal to a different partner,
      // so side_r is `better` here and only the hospital side varies.
      bool blocks = false;
      std::optional<Resident> witness;
      switch (notion) {
        case BlockingNotion::strong:
        case BlockingNotion::super:
          blocks = weak;
          witness = has_slot ? std::nullopt : weak_witness;
          break;
        case BlockingNotion::weak:
          blocks = strict;
          witness = has_slot ? std::nullopt : strict_witness;
          break;
      }
      if (blocks) report.pairs.push_back({r, h, witness});
    }
  }
  return report;
}

auto is_strongly_stable(const Instance& inst, const QuotaVector& quotas, const Matching& m) -> bool {
  return blocking_pairs(inst, quotas, m, BlockingNotion::strong).stable();
}

namespace detail {

auto resident_proposing(const Instance& inst, const QuotaVector& capacity, const Schedule& schedule)
    -> ProposalOutcome {
  const auto nr = static_cast<std::size_t>(inst.num_residents());
  const auto nh = static_cast<std::size_t>(inst.num_hospitals());
  ProposalOutcome out{Matching(inst.num_residents()), std::vector<bool>(nh, false)};

  std::vector<std::size_t> next(nr, 0);
  // Rank groups at or beyond cutoff[h] have been deleted from h's list.
  std::vector<int> cutoff(nh);
  std::vector<std::vector<Resident>> held(nh);
  for (Hospital h : inst.hospitals())
    cutoff[h.index()] = static_cast<int>(inst.preferences(h).size());

  PendingQueue queue(schedule);
  for (Resident r : inst.residents()) queue.push(r.value());

  while (!queue.empty()) {
    const Resident r{queue.pop()};
    const auto& list = inst.preferences(r);
    auto& i = next[r.index()];
    while (i < list.size() && *inst.rank(list[i], r) >= cutoff[list[i].index()]) ++i;
    if (i == list.size()) continue;

    const Hospital h = list[i];
    auto& members = held[h.index()];
    members.push_back(r);
    out.matching.assign(r, h);
    const int load = static_cast<int>(members.size());
    if (load < capacity[h]) continue;
    out.full[h.index()] = true;
    if (load == capacity[h]) continue;

    int worst = 0;
    for (Resident x : members) worst = std::max(worst, *inst.rank(h, x));
    cutoff[h.index()] = worst;
    std::vector<Resident> kept;
    for (Resident x : members) {
      if (*inst.rank(h, x) >= worst) {
        out.matching.unassign(x);
        queue.push(x.value());
      } else {
        kept.push_back(x);
      }
    }
    members = std::move(kept);
  }
  return out;
}

}  // namespace detail

auto solve_strong(const Instance& inst, const QuotaVector& quotas, const Schedule& schedule)
    -> std::optional<Matching> {
  if (quotas.size() != static_cast<std::size_t>(inst.num_hospitals()))
    throw std::invalid_argument("quota vector size does not match instance");
  auto outcome = detail::resident_proposing(inst, quotas, schedule);
  const auto loads = outcome.matching.loads(inst.num_hospitals());
  for (Hospital h : inst.hospitals())
    if (outcome.full[h.index()] && loads[h.index()] < quotas[h]) return std::nullopt;
  return std::move(outcome.matching);
}

}  // namespace hrht
