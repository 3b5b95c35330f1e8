#include "hrht/minsum.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hrht/oracle.hpp"
#include "hrht/stability.hpp"
#include "support.hpp"

namespace hrht {
namespace {

using testing::fixture;
using testing::matching_of;
using testing::quotas_of;

TEST(MinSum, FixB) {
  const auto inst = fixture("fixB.hrht").instance;
  const auto sol = minsum_augment(inst);
  EXPECT_EQ(sol.quotas, quotas_of({2, 1}));
  EXPECT_EQ(sol.matching, matching_of(inst, {{"r1", "h2"}, {"r2", "h1"}, {"r3", "h1"}}));
  EXPECT_EQ(sol.total_increase, 1);
  EXPECT_EQ(sol.matched_residents.size(), 3u);
  EXPECT_TRUE(sol.under_hospitals.empty());
  EXPECT_EQ(sol.full_hospitals.size(), 2u);
}

TEST(MinSum, FixA) {
  const auto inst = fixture("fixA.hrht").instance;
  const auto sol = minsum_augment(inst);
  EXPECT_EQ(sol.quotas, quotas_of({2}));
  EXPECT_EQ(sol.total_increase, 1);
  EXPECT_EQ(sol.matching, matching_of(inst, {{"r1", "h"}, {"r2", "h"}}));
}

TEST(MinSum, AlreadySolvableNeedsNothing) {
  const auto inst = fixture("fixD.hrht").instance;
  const auto sol = minsum_augment(inst);
  EXPECT_EQ(sol.total_increase, 0);
  EXPECT_EQ(sol.quotas, inst.quotas());
  EXPECT_TRUE(is_strongly_stable(inst, sol.quotas, sol.matching));
}

TEST(MinSum, UnderSubscribedHospitalsAreReported) {
  const auto inst = parse_instance(
      "HRHT v1\nresident r1: h1\nresident r2: h2\nhospital h1 [3]: r1\nhospital h2 [1]: r2\n");
  const auto sol = minsum_augment(inst);
  EXPECT_EQ(sol.total_increase, 0);
  ASSERT_EQ(sol.under_hospitals.size(), 1u);
  EXPECT_EQ(inst.name(sol.under_hospitals[0]), "h1");
  ASSERT_EQ(sol.matched_to_under.size(), 1u);
  EXPECT_EQ(inst.name(sol.matched_to_under[0]), "r1");
}

// Optimality and the rural-hospitals analog against exhaustive search.
TEST(Property, OptimalAndStableOnSweep) {
  for (const auto& c : testing::sweep_corpus(250, 20000)) {
    const Instance& inst = c.instance;
    const auto sol = minsum_augment(inst);
    ASSERT_TRUE(is_valid(inst, sol.quotas, sol.matching)) << "seed " << c.seed;
    EXPECT_TRUE(strongly_stable_by_definition(inst, sol.quotas, sol.matching)) << "seed " << c.seed;
    for (Hospital h : inst.hospitals()) EXPECT_GE(sol.quotas[h], inst.quota(h));
    EXPECT_EQ(sol.total_increase, total_increase(inst.quotas(), sol.quotas));

    const auto verdict = brute_minsum(inst);
    ASSERT_TRUE(verdict.optimum.has_value()) << "seed " << c.seed;
    EXPECT_EQ(sol.total_increase, *verdict.optimum) << "seed " << c.seed;

    const std::set<Resident> rm(sol.matched_residents.begin(), sol.matched_residents.end());
    for (const auto& w : verdict.witnesses)
      for (const auto& m : w.matchings) {
        std::set<Resident> got;
        for (Resident r : inst.residents())
          if (m.matched(r)) got.insert(r);
        EXPECT_EQ(got, rm) << "seed " << c.seed;
        for (Hospital h : sol.under_hospitals)
          EXPECT_EQ(static_cast<int>(m.residents_at(h).size()),
                    static_cast<int>(sol.matching.residents_at(h).size()))
              << "seed " << c.seed;
      }
  }
}

TEST(Property, ScheduleDoesNotChangeTotalsOrMatchedSet) {
  for (const auto& c : testing::sweep_corpus(300, 1000)) {
    const auto base = minsum_augment(c.instance);
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const auto other = minsum_augment(c.instance, Schedule{s * 104729 + c.seed});
      EXPECT_EQ(other.total_increase, base.total_increase) << "seed " << c.seed;
      EXPECT_EQ(other.matched_residents, base.matched_residents) << "seed " << c.seed;
      EXPECT_EQ(other.under_hospitals, base.under_hospitals) << "seed " << c.seed;
      for (Hospital h : base.under_hospitals)
        EXPECT_EQ(other.matching.residents_at(h).size(), base.matching.residents_at(h).size());
      EXPECT_TRUE(is_strongly_stable(c.instance, other.quotas, other.matching)) << "seed " << c.seed;
    }
  }
}

// A resident matched by the augmentation is matched, and no worse, in every
// strongly stable matching of every augmentation in the degree box.
TEST(Property, MatchedResidentsDoNoWorseElsewhere) {
  for (const auto& c : testing::sweep_corpus(150, 60000)) {
    const Instance& inst = c.instance;
    const auto sol = minsum_augment(inst);
    SearchBox::degree_capped(inst).for_each([&](const QuotaVector& q) -> bool {
      for (const auto& m : all_strongly_stable(inst, q))
        for (Resident r : sol.matched_residents) {
          const auto theirs = m.partner(r);
          if (!theirs) {
            ADD_FAILURE() << "seed " << c.seed << ": " << inst.name(r) << " unmatched";
            continue;
          }
          EXPECT_LE(*inst.rank(r, *theirs), *inst.rank(r, *sol.matching.partner(r))) << "seed " << c.seed;
        }
      return true;
    });
  }
}

}  // namespace
}  // namespace hrht
