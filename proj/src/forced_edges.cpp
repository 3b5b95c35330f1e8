#include "hrht/forced_edges.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hrht/minsum.hpp"
#include "hrht/stability.hpp"

namespace hrht {

auto to_string(FeInfeasibleReason reason) -> std::string_view {
  switch (reason) {
    case FeInfeasibleReason::forced_edge_deleted: return "forced-edge-deleted";
    case FeInfeasibleReason::deficient_distracting_hospital: return "deficient-distracting-hospital";
    case FeInfeasibleReason::isolated_distracting_resident: return "isolated-distracting-resident";
  }
  return "infeasible";
}

void validate_forced(const Instance& inst, const ForcedEdges& forced) {
  std::set<Resident> seen;
  for (const Edge& e : forced) {
    if (e.resident.value() < 0 || e.resident.value() >= inst.num_residents() ||
        e.hospital.value() < 0 || e.hospital.value() >= inst.num_hospitals())
      throw InstanceError(ErrorKind::unknown_id, "forced edge refers to an unknown vertex");
    if (!inst.acceptable(e.resident, e.hospital))
      throw InstanceError(ErrorKind::not_an_edge, "forced pair (" + inst.name(e.resident) + ", " +
                                                      inst.name(e.hospital) + ") is not an edge");
    if (!seen.insert(e.resident).second)
      throw InstanceError(ErrorKind::duplicate_entry,
                          "resident " + inst.name(e.resident) + " has two forced edges");
  }
}

auto prune(const Instance& inst, const ForcedEdges& forced) -> PruneOutcome {
  validate_forced(inst, forced);
  const auto nh = static_cast<std::size_t>(inst.num_hospitals());
  const auto nr = static_cast<std::size_t>(inst.num_residents());

  std::vector<int> forced_count(nh, 0);
  std::vector<bool> forced_resident(nr, false);
  for (const Edge& e : forced) {
    ++forced_count[e.hospital.index()];
    forced_resident[e.resident.index()] = true;
  }
  std::vector<int> base(nh);
  for (Hospital h : inst.hospitals()) base[h.index()] = std::max(inst.quota(h), forced_count[h.index()]);

  std::set<Edge> deleted;
  std::set<Resident> rd;
  std::set<Hospital> hd;
  for (const auto& [r, h] : forced) {
    const int rank_r_at_h = *inst.rank(h, r);
    const int rank_h_at_r = *inst.rank(r, h);
    // Residents h likes at least as much as r may not end up below h.
    for (std::size_t g = 0; g <= static_cast<std::size_t>(rank_r_at_h); ++g) {
      for (Resident r2 : inst.preferences(h)[g]) {
        rd.insert(r2);
        for (Hospital h2 : inst.preferences(r2))
          if (*inst.rank(r2, h2) > *inst.rank(r2, h)) deleted.insert({r2, h2});
      }
    }
    // Hospitals r prefers to h may only hold residents strictly better than r.
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank_h_at_r); ++i) {
      const Hospital h2 = inst.preferences(r)[i];
      hd.insert(h2);
      const int cut = *inst.rank(h2, r);
      const auto& groups = inst.preferences(h2);
      for (std::size_t g = static_cast<std::size_t>(cut); g < groups.size(); ++g)
        for (Resident r2 : groups[g]) deleted.insert({r2, h2});
    }
  }
  for (const Edge& e : forced) {
    if (deleted.contains(e))
      return FeInfeasible{FeInfeasibleReason::forced_edge_deleted,
                          "forced edge (" + inst.name(e.resident) + ", " + inst.name(e.hospital) +
                              ") conflicts with another forced edge"};
  }
  for (const Edge& e : forced)
    for (Hospital h2 : inst.preferences(e.resident)) deleted.insert({e.resident, h2});

  std::vector<int> qp(nh);
  for (std::size_t h = 0; h < nh; ++h) qp[h] = base[h] - forced_count[h];

  PruneResult out{
      inst.restricted([&](Resident r, Hospital h) { return !deleted.contains({r, h}); },
                      QuotaVector(qp)),
      QuotaVector(base),
      {deleted.begin(), deleted.end()},
      {rd.begin(), rd.end()},
      {hd.begin(), hd.end()},
      std::vector<std::optional<Hospital>>(nr),
      forced_count};
  for (Resident r : inst.residents()) {
    const auto& list = out.pruned.preferences(r);
    if (!list.empty()) out.last[r.index()] = list.back();
  }
  for (Resident r : out.distracting_residents) {
    if (!forced_resident[r.index()] && !out.last[r.index()])
      return FeInfeasible{FeInfeasibleReason::isolated_distracting_resident,
                          "resident " + inst.name(r) + " has no admissible hospital left"};
  }
  return out;
}

auto minsum_fe(const Instance& inst, const ForcedEdges& forced, const Schedule& schedule)
    -> FeOutcome {
  auto pruned_outcome = prune(inst, forced);
  if (auto* bad = std::get_if<FeInfeasible>(&pruned_outcome)) return *bad;
  const auto& p = std::get<PruneResult>(pruned_outcome);
  const Instance& gp = p.pruned;

  Matching m;
  std::vector<int> q;
  if (auto direct = solve_strong(gp, gp.quotas(), schedule)) {
    m = std::move(*direct);
    q = gp.quotas().values();
  } else {
    auto sol = minsum_augment(gp, schedule);
    m = std::move(sol.matching);
    q = sol.quotas.values();
  }

  const auto loads = m.loads(gp.num_hospitals());
  for (Hospital h : p.distracting_hospitals) {
    if (loads[h.index()] < gp.quota(h))
      return FeInfeasible{FeInfeasibleReason::deficient_distracting_hospital,
                          "hospital " + inst.name(h) + " holds " + std::to_string(loads[h.index()]) +
                              " of " + std::to_string(gp.quota(h)) + " non-forced places"};
  }

  std::vector<bool> forced_resident(static_cast<std::size_t>(inst.num_residents()), false);
  for (const Edge& e : forced) forced_resident[e.resident.index()] = true;
  for (Resident r : p.distracting_residents) {
    if (forced_resident[r.index()] || m.matched(r)) continue;
    const Hospital h = *p.last[r.index()];
    m.assign(r, h);
    ++q[h.index()];
  }
  for (const Edge& e : forced) {
    m.assign(e.resident, e.hospital);
    ++q[e.hospital.index()];
  }

  FeSolution out{QuotaVector(std::move(q)), std::move(m), 0};
  out.total_increase = total_increase(inst.quotas(), out.quotas);

  const auto report = blocking_pairs(inst, out.quotas, out.matching, BlockingNotion::strong);
  if (!report.stable()) {
    const auto& bp = report.pairs.front();
    std::ostringstream os;
    os << "forced-edge solution is not strongly stable: (" << inst.name(bp.resident) << ", "
       << inst.name(bp.hospital) << ") blocks";
    throw std::logic_error(os.str());
  }
  return out;
}

}  // namespace hrht
