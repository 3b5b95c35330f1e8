#include "hrht/minmax.hpp"

#include <gtest/gtest.h>

#include "hrht/oracle.hpp"
#include "hrht/stability.hpp"
#include "support.hpp"

namespace hrht {
namespace {

using testing::fixture;
using testing::matching_of;
using testing::quotas_of;

TEST(MinMax, FixBWithEllOne) {
  const auto inst = fixture("fixB.hrht").instance;
  const auto sol = minmax_bt(inst, 1);
  EXPECT_EQ(sol.quotas, quotas_of({2, 2}));
  EXPECT_EQ(sol.matching, matching_of(inst, {{"r1", "h1"}, {"r2", "h2"}, {"r3", "h1"}, {"r4", "h2"}}));
  EXPECT_EQ(sol.max_increase, 1);
  EXPECT_EQ(sol.ell, 1);
}

TEST(MinMax, LongTieIsReported) {
  const auto inst = parse_instance(
      "HRHT v1\nresident r1: h\nresident r2: h\nresident r3: h\nhospital h [1]: (r1 r2 r3)\n");
  try {
    (void)minmax_bt(inst, 1);
    FAIL() << "expected TieBoundError";
  } catch (const TieBoundError& e) {
    EXPECT_EQ(e.hospital(), "h");
    EXPECT_EQ(e.rank(), 1);
    EXPECT_EQ(e.tie_length(), 3);
    EXPECT_EQ(e.minimum_ell(), 2);
  }
  EXPECT_EQ(minmax_bt(inst, 2).quotas, quotas_of({3}));
  EXPECT_THROW((void)minmax_bt(inst, -1), std::invalid_argument);
}

TEST(MinMax, StrictInstanceNeedsNoIncrease) {
  const auto inst = fixture("fixD.hrht").instance;
  const auto sol = minmax_bt(inst, 0);
  EXPECT_EQ(sol.max_increase, 0);
  EXPECT_EQ(sol.matching, *solve_strong(inst, inst.quotas()));
}

// Resident-optimality over the whole ell-box, checked by enumeration.
TEST(Property, ResidentOptimalOverTheBox) {
  for (int ell : {1, 2}) {
    for (const auto& c : testing::bounded_tie_corpus(80, ell, 30000 + 1000 * ell)) {
      const Instance& inst = c.instance;
      const auto sol = minmax_bt(inst, ell);
      ASSERT_TRUE(is_valid(inst, sol.quotas, sol.matching));
      EXPECT_TRUE(strongly_stable_by_definition(inst, sol.quotas, sol.matching)) << "seed " << c.seed;
      EXPECT_LE(max_increase(inst.quotas(), sol.quotas), ell);
      std::vector<int> up;
      for (Hospital h : inst.hospitals()) up.push_back(inst.quota(h) + ell);
      SearchBox{inst.quotas(), QuotaVector(up)}.for_each([&](const QuotaVector& q) -> bool {
        for (const auto& m : all_strongly_stable(inst, q)) {
          EXPECT_LE(m.size(), sol.matching.size()) << "seed " << c.seed;
          for (Resident r : inst.residents()) {
            const auto theirs = m.partner(r);
            if (!theirs) continue;
            const auto mine = sol.matching.partner(r);
            if (!mine) {
              ADD_FAILURE() << "seed " << c.seed;
              continue;
            }
            EXPECT_LE(inst.rank(r, *mine), inst.rank(r, *theirs)) << "seed " << c.seed;
          }
        }
        return true;
      });
    }
  }
}

TEST(Property, LongestTieMinusOneAlwaysWorks) {
  for (const auto& c : testing::sweep_corpus(300, 45000)) {
    const int ell = max_tie_length(c.instance) - 1;
    const auto sol = minmax_bt(c.instance, ell);
    EXPECT_TRUE(is_strongly_stable(c.instance, sol.quotas, sol.matching)) << "seed " << c.seed;
    if (ell > 0) {
      EXPECT_THROW((void)minmax_bt(c.instance, ell - 1), TieBoundError);
    }
  }
}

TEST(Property, ScheduleDoesNotChangeTheMatching) {
  for (const auto& c : testing::bounded_tie_corpus(300, 2, 40000)) {
    const auto base = minmax_bt(c.instance, 2);
    for (std::uint64_t s = 1; s <= 4; ++s)
      EXPECT_EQ(minmax_bt(c.instance, 2, Schedule{s + c.seed}).matching, base.matching) << "seed " << c.seed;
  }
}

}  // namespace
}  // namespace hrht
