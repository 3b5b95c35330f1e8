#include "hrht/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hrht/stability.hpp"
#include "support.hpp"

namespace hrht {
namespace {

using testing::fixture;
using testing::matching_of;
using testing::quotas_of;

auto with_mode(OracleMode mode) -> SearchOptions {
  SearchOptions o;
  o.mode = mode;
  return o;
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_matchings(fixture("fixC.hrht").instance, quotas_of({1, 1})).size(), 3u);
  const auto a = fixture("fixA.hrht").instance;
  EXPECT_EQ(enumerate_matchings(a, quotas_of({1})).size(), 5u);
  EXPECT_EQ(enumerate_matchings(a, quotas_of({2})).size(), 11u);
  EXPECT_EQ(enumerate_matchings(a, quotas_of({0})).size(), 1u);
}

TEST(Enumerate, EachMatchingOnceAndValid) {
  for (const auto& c : testing::sweep_corpus(60, 70000)) {
    auto all = enumerate_matchings(c.instance, c.instance.quotas());
    std::sort(all.begin(), all.end(), canonical_less);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) EXPECT_TRUE(canonical_less(all[i], all[i + 1]));
    for (const auto& m : all) EXPECT_TRUE(is_valid(c.instance, c.instance.quotas(), m));
  }
}

TEST(Enumerate, EdgeCap) {
  const auto a = fixture("fixA.hrht").instance;
  EXPECT_THROW((void)enumerate_matchings(a, quotas_of({1}), 3), OracleLimitError);
  EXPECT_THROW((void)brute_minsum(a, [] { SearchOptions o; o.cap_edges = 3; return o; }()), OracleLimitError);
  SearchOptions pruned;
  pruned.mode = OracleMode::pruned;
  pruned.cap_edges = 3;
  EXPECT_EQ(brute_minsum(a, pruned).optimum, 1);
}

TEST(Definition, FixA) {
  const auto a = fixture("fixA.hrht").instance;
  EXPECT_FALSE(strongly_stable_by_definition(a, quotas_of({1}), matching_of(a, {{"r1", "h"}})));
  EXPECT_TRUE(strongly_stable_by_definition(a, quotas_of({2}), matching_of(a, {{"r1", "h"}, {"r2", "h"}})));
  EXPECT_FALSE(strongly_stable_by_definition(a, quotas_of({1}), matching_of(a, {{"r1", "h"}, {"r2", "h"}})));
  EXPECT_TRUE(all_strongly_stable(a, quotas_of({3})).empty());
}

TEST(Box, OdometerAndCaps) {
  const auto b = fixture("fixB.hrht").instance;
  const auto box = SearchBox::degree_capped(b);
  EXPECT_EQ(box.upper, quotas_of({3, 3}));
  EXPECT_DOUBLE_EQ(box.size(), 9.0);
  EXPECT_EQ(box.capped(1).upper, quotas_of({2, 2}));
  std::vector<std::vector<int>> seen;
  box.capped(1).for_each([&](const QuotaVector& q) {
    seen.push_back(q.values());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(Queries, FixB) {
  const auto b = fixture("fixB.hrht").instance;
  const auto minsum = brute_minsum(b);
  EXPECT_EQ(minsum.optimum, 1);
  ASSERT_EQ(minsum.witnesses.size(), 2u);
  EXPECT_EQ(minsum.witnesses[0].quotas, quotas_of({1, 2}));
  EXPECT_EQ(minsum.witnesses[1].quotas, quotas_of({2, 1}));
  EXPECT_EQ(minsum.witnesses[1].matchings.size(), 2u);
  EXPECT_EQ(brute_min_ell(b).optimum, 1);
  EXPECT_EQ(brute_min_cost(b, {5, 2}).optimum, 2);
  EXPECT_EQ(brute_ssm_all(b).optimum, 0);
  EXPECT_FALSE(brute_minsum(b, [] { SearchOptions o; o.max_level = 0; return o; }()).optimum.has_value());
  EXPECT_TRUE(brute_minsum(b, [] { SearchOptions o; o.max_level = 0; return o; }()).truncated);
}

TEST(Queries, NamesRoundTrip) {
  for (auto m : {OracleMode::independent, OracleMode::pruned, OracleMode::fast})
    EXPECT_EQ(parse_oracle_mode(to_string(m)), m);
  for (auto q : {OracleQuery::minsum, OracleQuery::minsum_fe, OracleQuery::min_ell, OracleQuery::min_cost,
                 OracleQuery::ssm_all})
    EXPECT_EQ(parse_oracle_query(to_string(q)), q);
  EXPECT_EQ(parse_oracle_query("min-sum"), std::nullopt);
}

TEST(Queries, FastModeRejectsForcedEdges) {
  const auto doc = fixture("fixD.hrht");
  EXPECT_THROW((void)brute_minsum_fe(doc.instance, doc.forced, with_mode(OracleMode::fast)),
               std::invalid_argument);
}

// The three modes answer every query identically; pruned and independent
// also return the same matchings.
TEST(Property, ModesAgree) {
  for (const auto& c : testing::sweep_corpus(150, 80000)) {
    const Instance& inst = c.instance;
    std::vector<long long> costs;
    for (Hospital h : inst.hospitals()) costs.push_back(static_cast<long long>((c.seed + h.value()) % 3));
    const auto ind = with_mode(OracleMode::independent);
    const auto pru = with_mode(OracleMode::pruned);
    const auto fast = with_mode(OracleMode::fast);
    for (const auto* opts : {&pru, &fast}) {
      EXPECT_EQ(brute_minsum(inst, *opts).optimum, brute_minsum(inst, ind).optimum) << "seed " << c.seed;
      EXPECT_EQ(brute_min_ell(inst, *opts).optimum, brute_min_ell(inst, ind).optimum) << "seed " << c.seed;
      EXPECT_EQ(brute_min_cost(inst, costs, *opts).optimum, brute_min_cost(inst, costs, ind).optimum)
          << "seed " << c.seed;
    }
    const auto a = brute_ssm_all(inst, ind);
    const auto b = brute_ssm_all(inst, pru);
    EXPECT_EQ(a.optimum, b.optimum);
    ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i)
      EXPECT_EQ(a.witnesses[i].matchings, b.witnesses[i].matchings) << "seed " << c.seed;
    const auto wa = brute_minsum(inst, ind).witnesses;
    const auto wb = brute_minsum(inst, pru).witnesses;
    ASSERT_EQ(wa.size(), wb.size());
    for (std::size_t i = 0; i < wa.size(); ++i) {
      EXPECT_EQ(wa[i].quotas, wb[i].quotas);
      EXPECT_EQ(wa[i].matchings, wb[i].matchings) << "seed " << c.seed;
    }
  }
}

// Widening the box by one past the degree bound never finds anything cheaper.
TEST(Property, DegreeCapIsSound) {
  for (const auto& c : testing::sweep_corpus(150, 90000)) {
    SearchOptions wide;
    wide.upper_slack = 1;
    EXPECT_EQ(brute_minsum(c.instance).optimum, brute_minsum(c.instance, wide).optimum) << "seed " << c.seed;
    EXPECT_EQ(brute_min_ell(c.instance).optimum, brute_min_ell(c.instance, wide).optimum) << "seed " << c.seed;
  }
}

TEST(Property, WitnessesAreStableAndOptimal) {
  for (const auto& c : testing::sweep_corpus(100, 95000)) {
    const auto v = brute_minsum(c.instance);
    ASSERT_TRUE(v.optimum.has_value());
    for (const auto& w : v.witnesses) {
      EXPECT_EQ(total_increase(c.instance.quotas(), w.quotas), *v.optimum);
      EXPECT_FALSE(w.matchings.empty());
      for (const auto& m : w.matchings) EXPECT_TRUE(is_strongly_stable(c.instance, w.quotas, m));
    }
  }
}

}  // namespace
}  // namespace hrht
