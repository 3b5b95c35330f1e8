#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hrht/forced_edges.hpp"
#include "hrht/instance.hpp"

namespace hrht {

// Brute-force ground truth. Nothing here calls the solvers except OracleMode::fast.

enum class OracleMode {
  independent,  // literal enumeration of every matching; edge cap applies
  pruned,       // exhaustive backtracking with sound cuts; no edge cap
  fast,         // feasibility by solve_strong (trusts the solver)
};

enum class OracleQuery { minsum, minsum_fe, min_ell, min_cost, ssm_all };

[[nodiscard]] std::string_view to_string(OracleMode mode);
[[nodiscard]] std::string_view to_string(OracleQuery query);
[[nodiscard]] std::optional<OracleMode> parse_oracle_mode(std::string_view text);
[[nodiscard]] std::optional<OracleQuery> parse_oracle_query(std::string_view text);

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBox {
  QuotaVector lower;
  QuotaVector upper;

  // lower = q, upper = max(q(h), deg(h)) + slack.
  [[nodiscard]] static SearchBox degree_capped(const Instance& inst, int slack = 0);
  // Same box with upper further limited to lower + ell.
  [[nodiscard]] SearchBox capped(int ell) const;
  [[nodiscard]] double size() const;
  // Odometer order, last hospital fastest. Stop early by returning false.
  void for_each(const std::function<bool(const QuotaVector&)>& visit) const;
};

struct SearchOptions {
  OracleMode mode = OracleMode::independent;
  int cap_edges = 16;
  int upper_slack = 0;
  bool collect_all = true;         // false: stop at the first feasible vector
  long long max_vectors = 5'000'000;
  std::optional<SearchBox> box;    // overrides the degree-capped box
  std::optional<long long> max_level;  // give up above this objective value
};

struct Witness {
  QuotaVector quotas;
  std::vector<Matching> matchings;  // canonical order
};

struct OracleVerdict {
  OracleQuery query = OracleQuery::minsum;
  std::optional<long long> optimum;  // nullopt: nothing feasible in the searched range
  std::vector<Witness> witnesses;
  long long feasibility_checks = 0;
  bool truncated = false;  // max_level stopped the search before the box was exhausted
};

// Every quota-valid matching, each once. Order: residents in declared order,
// first resident most significant; per resident unmatched first, then its list.
// Throws OracleLimitError when the instance has more than cap_edges edges.
void for_each_matching(const Instance& inst, const QuotaVector& quotas,
                       const std::function<bool(const Matching&)>& visit, int cap_edges = 16);
[[nodiscard]] std::vector<Matching> enumerate_matchings(const Instance& inst,
                                                        const QuotaVector& quotas,
                                                        int cap_edges = 16);

// Literal strong-stability test with its own rank tables, sharing nothing with
// the stability module. Invalid matchings are reported as unstable.
[[nodiscard]] bool strongly_stable_by_definition(const Instance& inst, const QuotaVector& quotas,
                                                 const Matching& m);

// Strongly stable matchings containing `forced`, in canonical order. With
// first_only the search stops after one. Fast mode yields solve_strong's
// matching (and rejects a nonempty forced set).
[[nodiscard]] std::vector<Matching> stable_matchings(const Instance& inst, const QuotaVector& quotas,
                                                     const ForcedEdges& forced, OracleMode mode,
                                                     int cap_edges = 16, bool first_only = false);
[[nodiscard]] std::vector<Matching> all_strongly_stable(const Instance& inst,
                                                        const QuotaVector& quotas,
                                                        OracleMode mode = OracleMode::independent,
                                                        int cap_edges = 16);

// Total lexicographic order used for witness lists: partner index per resident, unmatched first.
[[nodiscard]] bool canonical_less(const Matching& a, const Matching& b);

[[nodiscard]] OracleVerdict brute_minsum(const Instance& inst, const SearchOptions& options = {});
[[nodiscard]] OracleVerdict brute_minsum_fe(const Instance& inst, const ForcedEdges& forced,
                                            const SearchOptions& options = {});
[[nodiscard]] OracleVerdict brute_min_ell(const Instance& inst, const SearchOptions& options = {});
// costs[h] multiplies each unit of increase at h.
[[nodiscard]] OracleVerdict brute_min_cost(const Instance& inst, const std::vector<long long>& costs,
                                           const SearchOptions& options = {});
// All strongly stable matchings at the instance quotas; optimum is their count.
[[nodiscard]] OracleVerdict brute_ssm_all(const Instance& inst, const SearchOptions& options = {});

}  // namespace hrht
