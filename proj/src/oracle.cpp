#include "hrht/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

#include "hrht/stability.hpp"

namespace hrht {

auto to_string(OracleMode mode) -> std::string_view {
  switch (mode) {
    case OracleMode::independent: return "independent";
    case OracleMode::pruned: return "pruned";
    case OracleMode::fast: return "fast";
  }
  return "independent";
}

auto to_string(OracleQuery query) -> std::string_view {
  switch (query) {
    case OracleQuery::minsum: return "minsum";
    case OracleQuery::minsum_fe: return "minsum-fe";
    case OracleQuery::min_ell: return "min-ell";
    case OracleQuery::min_cost: return "min-cost";
    case OracleQuery::ssm_all: return "ssm-all";
  }
  return "minsum";
}

auto parse_oracle_mode(std::string_view text) -> std::optional<OracleMode> {
  for (auto mode : {OracleMode::independent, OracleMode::pruned, OracleMode::fast})
    if (text == to_string(mode)) return mode;
  return std::nullopt;
}

auto parse_oracle_query(std::string_view text) -> std::optional<OracleQuery> {
  for (auto q : {OracleQuery::minsum, OracleQuery::minsum_fe, OracleQuery::min_ell,
                 OracleQuery::min_cost, OracleQuery::ssm_all})
    if (text == to_string(q)) return q;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SearchBox

auto SearchBox::degree_capped(const Instance& inst, int slack) -> SearchBox {
  std::vector<int> up(static_cast<std::size_t>(inst.num_hospitals()));
  for (Hospital h : inst.hospitals()) up[h.index()] = std::max(inst.quota(h), inst.degree(h)) + slack;
  return {inst.quotas(), QuotaVector(std::move(up))};
}

auto SearchBox::capped(int ell) const -> SearchBox {
  std::vector<int> up = upper.values();
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = std::min(up[i], lower.values()[i] + ell);
  return {lower, QuotaVector(std::move(up))};
}

auto SearchBox::size() const -> double {
  double total = 1;
  for (std::size_t i = 0; i < lower.size(); ++i)
    total *= std::max(0, upper.values()[i] - lower.values()[i] + 1);
  return total;
}

void SearchBox::for_each(const std::function<bool(const QuotaVector&)>& visit) const {
  const std::size_t n = lower.size();
  for (std::size_t i = 0; i < n; ++i)
    if (upper.values()[i] < lower.values()[i]) return;
  std::vector<int> cur = lower.values();
  while (true) {
    if (!visit(QuotaVector(cur))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < upper.values()[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lower.values()[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

namespace {

constexpr int kNone = INT_MAX;

// Dense rank tables built straight from the preference lists.
class Tables {
 public:
  explicit Tables(const Instance& inst)
      : nr_(inst.num_residents()),
        nh_(inst.num_hospitals()),
        res_(static_cast<std::size_t>(nr_ * nh_), kNone),
        hos_(static_cast<std::size_t>(nr_ * nh_), kNone) {
    for (Resident r : inst.residents()) {
      const auto& list = inst.preferences(r);
      for (std::size_t i = 0; i < list.size(); ++i) res_[at(r.value(), list[i].value())] = static_cast<int>(i);
    }
    for (Hospital h : inst.hospitals()) {
      const auto& groups = inst.preferences(h);
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (Resident r : groups[g]) hos_[at(r.value(), h.value())] = static_cast<int>(g);
    }
  }

  [[nodiscard]] int res(int r, int h) const { return res_[at(r, h)]; }
  [[nodiscard]] int hos(int h, int r) const { return hos_[at(r, h)]; }
  [[nodiscard]] int residents() const { return nr_; }
  [[nodiscard]] int hospitals() const { return nh_; }

 private:
  [[nodiscard]] std::size_t at(int r, int h) const { return static_cast<std::size_t>(r * nh_ + h); }
  int nr_;
  int nh_;
  std::vector<int> res_;
  std::vector<int> hos_;
};

// partner[r] = hospital index or -1.
auto literal_stable(const Tables& t, const std::vector<int>& partner, const std::vector<int>& quota)
    -> bool {
  std::vector<int> load(static_cast<std::size_t>(t.hospitals()), 0);
  for (int r = 0; r < t.residents(); ++r) {
    const int h = partner[static_cast<std::size_t>(r)];
    if (h < 0) continue;
    if (t.res(r, h) == kNone) return false;
    ++load[static_cast<std::size_t>(h)];
  }
  for (int h = 0; h < t.hospitals(); ++h)
    if (load[static_cast<std::size_t>(h)] > quota[static_cast<std::size_t>(h)]) return false;

  for (int r = 0; r < t.residents(); ++r) {
    const int mine = partner[static_cast<std::size_t>(r)];
    for (int h = 0; h < t.hospitals(); ++h) {
      if (h == mine || t.res(r, h) == kNone) continue;
      const bool r_strict = mine < 0 || t.res(r, h) < t.res(r, mine);
      const bool r_weak = r_strict || t.res(r, h) == t.res(r, mine);
      const bool slot = load[static_cast<std::size_t>(h)] < quota[static_cast<std::size_t>(h)];
      bool h_strict = slot;
      bool h_weak = slot;
      for (int other = 0; other < t.residents(); ++other) {
        if (partner[static_cast<std::size_t>(other)] != h) continue;
        if (t.hos(h, r) <= t.hos(h, other)) h_weak = true;
        if (t.hos(h, r) < t.hos(h, other)) h_strict = true;
      }
      if ((r_strict && h_weak) || (r_weak && h_strict)) return false;
    }
  }
  return true;
}

auto to_partner(const Matching& m) -> std::vector<int> {
  std::vector<int> p(static_cast<std::size_t>(m.num_residents()), -1);
  for (int r = 0; r < m.num_residents(); ++r)
    if (auto h = m.partner(Resident{r})) p[static_cast<std::size_t>(r)] = h->value();
  return p;
}

auto to_matching(const std::vector<int>& partner) -> Matching {
  Matching m(static_cast<int>(partner.size()));
  for (std::size_t r = 0; r < partner.size(); ++r)
    if (partner[r] >= 0) m.assign(Resident{static_cast<int>(r)}, Hospital{partner[r]});
  return m;
}

void check_cap(const Instance& inst, int cap_edges) {
  if (inst.num_edges() > cap_edges)
    throw OracleLimitError("instance has " + std::to_string(inst.num_edges()) +
                           " edges, above the enumeration cap of " + std::to_string(cap_edges));
}

auto forced_partner(const Instance& inst, const ForcedEdges& forced) -> std::vector<int> {
  std::vector<int> f(static_cast<std::size_t>(inst.num_residents()), -2);
  for (const Edge& e : forced) f[e.resident.index()] = e.hospital.value();
  return f;
}

// Exhaustive backtracking over assignments. A branch is cut only when some
// edge already blocks in every completion:
//  - an assigned resident prefers h to its place and h holds someone it ranks no higher;
//  - h must end full (someone wants it) but cannot reach its quota any more.
// Leaves are confirmed with the literal test.
class PrunedSearch {
 public:
  PrunedSearch(const Instance& inst, const Tables& t, const std::vector<int>& quota,
               const std::vector<int>& forced, bool first_only, std::vector<Matching>& out)
      : inst_(inst), t_(t), quota_(quota), forced_(forced), first_only_(first_only), out_(out) {
    const auto nr = static_cast<std::size_t>(inst.num_residents());
    const auto nh = static_cast<std::size_t>(inst.num_hospitals());
    std::vector<bool> placed(nr, false);
    for (Hospital h : inst.hospitals())
      for (const auto& g : inst.preferences(h))
        for (Resident r : g)
          if (!placed[r.index()]) placed[r.index()] = true, order_.push_back(r.value());
    for (std::size_t r = 0; r < nr; ++r)
      if (!placed[r]) order_.push_back(static_cast<int>(r));
    partner_.assign(nr, -1);
    load_.assign(nh, 0);
    members_.assign(nh, {});
    remaining_.assign(nh, 0);
    want_total_.assign(nh, 0);
    want_count_.assign(nh, {});
    for (Hospital h : inst.hospitals()) {
      remaining_[h.index()] = inst.degree(h);
      want_count_[h.index()].assign(inst.preferences(h).size(), 0);
    }
  }

  void run() { dfs(0); }

 private:
  void dfs(std::size_t k) {
    if (done_) return;
    if (k == order_.size()) {
      if (literal_stable(t_, partner_, quota_)) {
        out_.push_back(to_matching(partner_));
        if (first_only_) done_ = true;
      }
      return;
    }
    const int r = order_[k];
    const auto& list = inst_.preferences(Resident{r});
    const int f = forced_[static_cast<std::size_t>(r)];
    // Choice index i < list.size() picks list[i]; i == list.size() is unmatched.
    for (std::size_t i = 0; i <= list.size() && !done_; ++i) {
      const int x = i < list.size() ? list[i].value() : -1;
      if (f != -2 && x != f) continue;
      if (x >= 0 && load_[static_cast<std::size_t>(x)] >= quota_[static_cast<std::size_t>(x)]) continue;
      if (!admissible(r, list, i, x)) continue;
      apply(r, list, i, x, +1);
      if (capacity_ok(list)) dfs(k + 1);
      apply(r, list, i, x, -1);
    }
  }

  bool admissible(int r, const std::vector<Hospital>& list, std::size_t i, int x) const {
    for (std::size_t j = 0; j < i; ++j) {
      const int h = list[j].value();
      for (int other : members_[static_cast<std::size_t>(h)])
        if (t_.hos(h, r) <= t_.hos(h, other)) return false;
    }
    if (x >= 0) {
      const auto& wc = want_count_[static_cast<std::size_t>(x)];
      for (int g = 0; g <= t_.hos(x, r); ++g)
        if (wc[static_cast<std::size_t>(g)] > 0) return false;
    }
    return true;
  }

  void apply(int r, const std::vector<Hospital>& list, std::size_t i, int x, int dir) {
    partner_[static_cast<std::size_t>(r)] = dir > 0 ? x : -1;
    if (x >= 0) {
      auto& mem = members_[static_cast<std::size_t>(x)];
      load_[static_cast<std::size_t>(x)] += dir;
      if (dir > 0) mem.push_back(r);
      else mem.pop_back();
    }
    for (std::size_t j = 0; j < list.size(); ++j) {
      const auto h = list[j].index();
      remaining_[h] -= dir;
      if (j < i) {
        want_count_[h][static_cast<std::size_t>(t_.hos(list[j].value(), r))] += dir;
        want_total_[h] += dir;
      }
    }
  }

  bool capacity_ok(const std::vector<Hospital>& list) const {
    for (Hospital h : list) {
      const auto i = h.index();
      if (want_total_[i] > 0 && load_[i] + remaining_[i] < quota_[i]) return false;
    }
    return true;
  }

  const Instance& inst_;
  const Tables& t_;
  const std::vector<int>& quota_;
  const std::vector<int>& forced_;
  bool first_only_;
  std::vector<Matching>& out_;
  bool done_ = false;

  std::vector<int> order_;
  std::vector<int> partner_;
  std::vector<int> load_;
  std::vector<std::vector<int>> members_;
  std::vector<int> remaining_;
  std::vector<int> want_total_;
  std::vector<std::vector<int>> want_count_;
};

}  // namespace

void for_each_matching(const Instance& inst, const QuotaVector& quotas,
                       const std::function<bool(const Matching&)>& visit, int cap_edges) {
  check_cap(inst, cap_edges);
  if (quotas.size() != static_cast<std::size_t>(inst.num_hospitals()))
    throw std::invalid_argument("quota vector size does not match instance");
  const int n = inst.num_residents();
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<int> load(static_cast<std::size_t>(inst.num_hospitals()), 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int r) {
    if (stop) return;
    if (r == n) {
      if (!visit(to_matching(partner))) stop = true;
      return;
    }
    rec(r + 1);
    for (Hospital h : inst.preferences(Resident{r})) {
      if (stop) return;
      if (load[h.index()] >= quotas[h]) continue;
      partner[static_cast<std::size_t>(r)] = h.value();
      ++load[h.index()];
      rec(r + 1);
      --load[h.index()];
      partner[static_cast<std::size_t>(r)] = -1;
    }
  };
  rec(0);
}

auto enumerate_matchings(const Instance& inst, const QuotaVector& quotas, int cap_edges)
    -> std::vector<Matching> {
  std::vector<Matching> out;
  for_each_matching(inst, quotas, [&](const Matching& m) { out.push_back(m); return true; }, cap_edges);
  return out;
}

auto strongly_stable_by_definition(const Instance& inst, const QuotaVector& quotas, const Matching& m)
    -> bool {
  if (m.num_residents() != inst.num_residents() ||
      quotas.size() != static_cast<std::size_t>(inst.num_hospitals()))
    return false;
  return literal_stable(Tables(inst), to_partner(m), quotas.values());
}

auto canonical_less(const Matching& a, const Matching& b) -> bool {
  return to_partner(a) < to_partner(b);
}

auto stable_matchings(const Instance& inst, const QuotaVector& quotas, const ForcedEdges& forced,
                      OracleMode mode, int cap_edges, bool first_only) -> std::vector<Matching> {
  if (quotas.size() != static_cast<std::size_t>(inst.num_hospitals()))
    throw std::invalid_argument("quota vector size does not match instance");
  validate_forced(inst, forced);
  std::vector<Matching> out;
  switch (mode) {
    case OracleMode::fast: {
      if (!forced.empty()) throw std::invalid_argument("fast mode cannot honour forced edges");
      if (auto m = solve_strong(inst, quotas)) out.push_back(std::move(*m));
      return out;
    }
    case OracleMode::independent: {
      const Tables t(inst);
      const auto f = forced_partner(inst, forced);
      for_each_matching(
          inst, quotas,
          [&](const Matching& m) {
            auto p = to_partner(m);
            for (std::size_t r = 0; r < p.size(); ++r)
              if (f[r] != -2 && p[r] != f[r]) return true;
            if (literal_stable(t, p, quotas.values())) {
              out.push_back(m);
              if (first_only) return false;
            }
            return true;
          },
          cap_edges);
      break;
    }
    case OracleMode::pruned: {
      const Tables t(inst);
      const auto f = forced_partner(inst, forced);
      PrunedSearch search(inst, t, quotas.values(), f, first_only, out);
      search.run();
      break;
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

auto all_strongly_stable(const Instance& inst, const QuotaVector& quotas, OracleMode mode,
                         int cap_edges) -> std::vector<Matching> {
  if (mode == OracleMode::fast)
    throw std::invalid_argument("listing every strongly stable matching needs an enumerating mode");
  return stable_matchings(inst, quotas, {}, mode, cap_edges);
}

namespace {

class LevelSearch {
 public:
  LevelSearch(const Instance& inst, OracleQuery query, const ForcedEdges& forced,
              const SearchOptions& options)
      : inst_(inst),
        forced_(forced),
        options_(options),
        box_(options.box ? *options.box : SearchBox::degree_capped(inst, options.upper_slack)) {
    verdict_.query = query;
    if (box_.lower.size() != static_cast<std::size_t>(inst.num_hospitals()) ||
        box_.upper.size() != box_.lower.size())
      throw std::invalid_argument("search box does not match instance");
    if (options.mode == OracleMode::fast && !forced.empty())
      throw std::invalid_argument("fast mode cannot honour forced edges");
    if (options.mode == OracleMode::independent) check_cap(inst, options.cap_edges);
  }

  // Visits the whole box once, bucketed by objective value.
  OracleVerdict by_buckets(const std::function<long long(const QuotaVector&)>& level_of) {
    if (box_.size() > static_cast<double>(options_.max_vectors))
      throw OracleLimitError("search box holds " + std::to_string(box_.size()) +
                             " quota vectors, above the limit");
    std::vector<std::pair<long long, QuotaVector>> all;
    box_.for_each([&](const QuotaVector& v) {
      all.emplace_back(level_of(v), v);
      return true;
    });
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t i = 0;
    while (i < all.size()) {
      const long long level = all[i].first;
      if (options_.max_level && level > *options_.max_level) {
        verdict_.truncated = true;
        break;
      }
      std::size_t j = i;
      while (j < all.size() && all[j].first == level) ++j;
      bool found = false;
      for (std::size_t k = i; k < j; ++k) {
        if (test(all[k].second)) {
          found = true;
          if (!options_.collect_all) break;
        }
      }
      if (found) {
        verdict_.optimum = level;
        break;
      }
      i = j;
    }
    return std::move(verdict_);
  }

  // Largest per-hospital increase, visited level by level without materialising the box.
  OracleVerdict by_max_increase() {
    const auto& q = inst_.quotas();
    int top = 0;
    for (Hospital h : inst_.hospitals()) top = std::max(top, box_.upper[h] - q[h]);
    for (int level = 0; level <= top; ++level) {
      if (options_.max_level && level > *options_.max_level) {
        verdict_.truncated = true;
        break;
      }
      std::vector<int> up = box_.upper.values();
      for (Hospital h : inst_.hospitals()) up[h.index()] = std::min(up[h.index()], q[h] + level);
      const SearchBox layer{box_.lower, QuotaVector(std::move(up))};
      if (layer.size() > static_cast<double>(options_.max_vectors))
        throw OracleLimitError("quota layer " + std::to_string(level) + " holds " +
                               std::to_string(layer.size()) + " vectors, above the limit");
      bool found = false;
      layer.for_each([&](const QuotaVector& v) {
        if (max_increase(q, v) != level) return true;
        if (test(v)) {
          found = true;
          if (!options_.collect_all) return false;
        }
        return true;
      });
      if (found) {
        verdict_.optimum = level;
        break;
      }
    }
    return std::move(verdict_);
  }

 private:
  bool test(const QuotaVector& v) {
    ++verdict_.feasibility_checks;
    const bool first_only = !options_.collect_all;
    auto found = stable_matchings(inst_, v, forced_, options_.mode, options_.cap_edges, first_only);
    if (found.empty()) return false;
    verdict_.witnesses.push_back({v, std::move(found)});
    return true;
  }

  const Instance& inst_;
  ForcedEdges forced_;
  SearchOptions options_;
  SearchBox box_;
  OracleVerdict verdict_;
};

}  // namespace

auto brute_minsum(const Instance& inst, const SearchOptions& options) -> OracleVerdict {
  LevelSearch search(inst, OracleQuery::minsum, {}, options);
  return search.by_buckets([&](const QuotaVector& v) { return total_increase(inst.quotas(), v); });
}

auto brute_minsum_fe(const Instance& inst, const ForcedEdges& forced, const SearchOptions& options)
    -> OracleVerdict {
  validate_forced(inst, forced);
  if (options.mode == OracleMode::fast && !forced.empty())
    throw std::invalid_argument("forced-edge search needs an enumerating mode");
  LevelSearch search(inst, OracleQuery::minsum_fe, forced, options);
  return search.by_buckets([&](const QuotaVector& v) { return total_increase(inst.quotas(), v); });
}

auto brute_min_ell(const Instance& inst, const SearchOptions& options) -> OracleVerdict {
  LevelSearch search(inst, OracleQuery::min_ell, {}, options);
  return search.by_max_increase();
}

auto brute_min_cost(const Instance& inst, const std::vector<long long>& costs,
                    const SearchOptions& options) -> OracleVerdict {
  if (costs.size() != static_cast<std::size_t>(inst.num_hospitals()))
    throw std::invalid_argument("cost vector size does not match instance");
  for (long long c : costs)
    if (c < 0) throw std::invalid_argument("costs must be nonnegative");
  LevelSearch search(inst, OracleQuery::min_cost, {}, options);
  return search.by_buckets([&](const QuotaVector& v) {
    long long total = 0;
    for (Hospital h : inst.hospitals())
      total += costs[h.index()] * std::max(0, v[h] - inst.quota(h));
    return total;
  });
}

auto brute_ssm_all(const Instance& inst, const SearchOptions& options) -> OracleVerdict {
  OracleVerdict verdict;
  verdict.query = OracleQuery::ssm_all;
  verdict.feasibility_checks = 1;
  auto all = all_strongly_stable(inst, inst.quotas(), options.mode, options.cap_edges);
  verdict.optimum = static_cast<long long>(all.size());
  verdict.witnesses.push_back({inst.quotas(), std::move(all)});
  return verdict;
}

}  // namespace hrht
