#include "hrht/forced_edges.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hrht/oracle.hpp"
#include "hrht/stability.hpp"
#include "support.hpp"

namespace hrht {
namespace {

using testing::edge_of;
using testing::fixture;
using testing::matching_of;
using testing::quotas_of;

TEST(Prune, FixC) {
  const auto doc = fixture("fixC.hrht");
  const auto out = prune(doc.instance, doc.forced);
  ASSERT_TRUE(std::holds_alternative<PruneResult>(out));
  const auto& p = std::get<PruneResult>(out);
  EXPECT_EQ(p.pruned.num_edges(), 0);
  EXPECT_EQ(p.pruned.quota(Hospital{1}), 0);
  EXPECT_EQ(p.deleted.size(), 2u);
  ASSERT_EQ(p.distracting_hospitals.size(), 1u);
  EXPECT_EQ(doc.instance.name(p.distracting_hospitals[0]), "h1");
  EXPECT_FALSE(p.last[0].has_value());
}

TEST(Prune, FixD) {
  const auto doc = fixture("fixD.hrht");
  const auto& inst = doc.instance;
  const auto p = std::get<PruneResult>(prune(inst, doc.forced));
  EXPECT_EQ(p.pruned.num_edges(), 1);
  EXPECT_TRUE(p.pruned.acceptable(Resident{1}, Hospital{0}));
  EXPECT_EQ(p.pruned.quota(Hospital{0}), 0);
  EXPECT_EQ(p.distracting_residents, std::vector<Resident>{Resident{0}});
  EXPECT_TRUE(p.distracting_hospitals.empty());
  EXPECT_EQ(p.forced_per_hospital, (std::vector<int>{1, 0}));
  EXPECT_EQ(p.deleted, (std::vector<Edge>{edge_of(inst, "r1", "h1"), edge_of(inst, "r1", "h2")}));
}

TEST(Prune, MalformedForcedSets) {
  const auto inst = fixture("fixD.hrht").instance;
  auto kind = [&](const ForcedEdges& q) -> std::optional<ErrorKind> {
    try {
      validate_forced(inst, q);
    } catch (const InstanceError& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  EXPECT_EQ(kind({edge_of(inst, "r1", "h1"), edge_of(inst, "r1", "h2")}), ErrorKind::duplicate_entry);
  EXPECT_EQ(kind({Edge{Resident{1}, Hospital{1}}}), ErrorKind::not_an_edge);
  EXPECT_EQ(kind({}), std::nullopt);
  EXPECT_THROW((void)minsum_fe(inst, {Edge{Resident{1}, Hospital{1}}}), InstanceError);
}

TEST(MinSumFe, FixCIsInfeasible) {
  const auto doc = fixture("fixC.hrht");
  const auto out = minsum_fe(doc.instance, doc.forced);
  ASSERT_TRUE(std::holds_alternative<FeInfeasible>(out));
  EXPECT_EQ(std::get<FeInfeasible>(out).reason, FeInfeasibleReason::deficient_distracting_hospital);
  EXPECT_FALSE(brute_minsum_fe(doc.instance, doc.forced).optimum.has_value());
}

TEST(MinSumFe, FixDNeedsNoIncrease) {
  const auto doc = fixture("fixD.hrht");
  const auto out = minsum_fe(doc.instance, doc.forced);
  ASSERT_TRUE(std::holds_alternative<FeSolution>(out));
  const auto& sol = std::get<FeSolution>(out);
  EXPECT_EQ(sol.total_increase, 0);
  EXPECT_EQ(sol.quotas, quotas_of({1, 1}));
  EXPECT_EQ(sol.matching, matching_of(doc.instance, {{"r1", "h1"}}));
  EXPECT_EQ(brute_minsum_fe(doc.instance, doc.forced).optimum, 0);
}

TEST(MinSumFe, ForcedEdgeDeleted) {
  const auto inst = parse_instance(
      "HRHT v1\nresident r1: h1 h2\nresident r2: h1\nhospital h1 [1]: r1 r2\nhospital h2 [1]: r1\n");
  const ForcedEdges q{edge_of(inst, "r2", "h1"), edge_of(inst, "r1", "h2")};
  const auto out = minsum_fe(inst, q);
  ASSERT_TRUE(std::holds_alternative<FeInfeasible>(out));
  EXPECT_EQ(std::get<FeInfeasible>(out).reason, FeInfeasibleReason::forced_edge_deleted);
  EXPECT_FALSE(brute_minsum_fe(inst, q).optimum.has_value());
}

TEST(MinSumFe, QuotaBelowForcedLoadIsCharged) {
  const auto inst = parse_instance(
      "HRHT v1\nresident r1: h\nresident r2: h\nhospital h [1]: r1 r2\n");
  const ForcedEdges q{edge_of(inst, "r1", "h"), edge_of(inst, "r2", "h")};
  const auto sol = std::get<FeSolution>(minsum_fe(inst, q));
  EXPECT_EQ(sol.total_increase, 1);
  EXPECT_EQ(sol.quotas, quotas_of({2}));
  EXPECT_EQ(brute_minsum_fe(inst, q).optimum, 1);
}

TEST(MinSumFe, DistractingResidentGoesToItsLastHospital) {
  // r1 outranks the forced r2 at h1, so it must end up somewhere: the pruned
  // instance leaves it only h1, whose pruned quota is 0.
  const auto inst = parse_instance(
      "HRHT v1\nresident r1: h1\nresident r2: h1\nhospital h1 [1]: r1 r2\n");
  const ForcedEdges q{edge_of(inst, "r2", "h1")};
  const auto sol = std::get<FeSolution>(minsum_fe(inst, q));
  EXPECT_EQ(sol.total_increase, 1);
  EXPECT_EQ(sol.matching, matching_of(inst, {{"r1", "h1"}, {"r2", "h1"}}));
  EXPECT_EQ(brute_minsum_fe(inst, q).optimum, 1);
}

TEST(FeReason, Names) {
  EXPECT_EQ(to_string(FeInfeasibleReason::forced_edge_deleted), "forced-edge-deleted");
  EXPECT_EQ(to_string(FeInfeasibleReason::deficient_distracting_hospital), "deficient-distracting-hospital");
  EXPECT_EQ(to_string(FeInfeasibleReason::isolated_distracting_resident), "isolated-distracting-resident");
}

// One or two forced edges on distinct residents, drawn from the edge set.
auto random_forced(const Instance& inst, std::uint64_t seed) -> ForcedEdges {
  std::mt19937_64 rng(seed);
  auto edges = inst.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  const std::size_t want = 1 + rng() % 2;
  ForcedEdges q;
  for (const Edge& e : edges) {
    if (q.size() == want) break;
    if (std::none_of(q.begin(), q.end(), [&](const Edge& f) { return f.resident == e.resident; }))
      q.push_back(e);
  }
  return q;
}

TEST(Property, AgreesWithOracle) {
  int feasible = 0;
  int infeasible = 0;
  for (const auto& c : testing::sweep_corpus(2000, 50000)) {
    const Instance& inst = c.instance;
    if (inst.num_edges() == 0) continue;
    const auto q = random_forced(inst, c.seed);
    const auto out = minsum_fe(inst, q);
    const auto verdict = brute_minsum_fe(inst, q);
    if (const auto* sol = std::get_if<FeSolution>(&out)) {
      ++feasible;
      for (const Edge& e : q) EXPECT_EQ(sol->matching.partner(e.resident), e.hospital);
      EXPECT_TRUE(strongly_stable_by_definition(inst, sol->quotas, sol->matching)) << "seed " << c.seed;
      EXPECT_EQ(sol->total_increase, total_increase(inst.quotas(), sol->quotas));
      EXPECT_EQ(verdict.optimum, sol->total_increase) << "seed " << c.seed;
    } else {
      ++infeasible;
      EXPECT_FALSE(verdict.optimum.has_value())
          << "seed " << c.seed << " " << to_string(std::get<FeInfeasible>(out).reason);
    }

    // Matchings found by the oracle meet the deleted edges only in Q.
    const auto pruned = prune(inst, q);
    if (const auto* p = std::get_if<PruneResult>(&pruned))
      for (const auto& w : verdict.witnesses)
        for (const auto& m : w.matchings)
          for (const Edge& e : m.edges()) {
            const bool deleted = std::binary_search(p->deleted.begin(), p->deleted.end(), e);
            const bool forced = std::find(q.begin(), q.end(), e) != q.end();
            EXPECT_EQ(deleted, forced) << "seed " << c.seed;
          }
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 20);
}

}  // namespace
}  // namespace hrht
