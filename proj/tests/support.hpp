#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hrht/instance.hpp"
#include "hrht/random_instance.hpp"

namespace hrht::testing {

inline auto fixture_path(const std::string& name) -> std::string {
  return std::string(HRHT_FIXTURE_DIR) + "/" + name;
}

inline auto fixture_text(const std::string& name) -> std::string {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline auto fixture(const std::string& name) -> InstanceDocument {
  return parse_document(fixture_text(name));
}

inline auto quotas_of(std::initializer_list<int> q) -> QuotaVector { return QuotaVector(std::vector<int>(q)); }

inline auto resident(const Instance& inst, const std::string& name) -> Resident {
  auto r = inst.find_resident(name);
  if (!r) throw std::runtime_error("no resident " + name);
  return *r;
}

inline auto hospital(const Instance& inst, const std::string& name) -> Hospital {
  auto h = inst.find_hospital(name);
  if (!h) throw std::runtime_error("no hospital " + name);
  return *h;
}

// Matching from (resident, hospital) name pairs; residents not listed are unmatched.
inline auto matching_of(const Instance& inst,
                        std::initializer_list<std::pair<const char*, const char*>> pairs) -> Matching {
  Matching m(inst.num_residents());
  for (const auto& [r, h] : pairs) m.assign(resident(inst, r), hospital(inst, h));
  return m;
}

inline auto edge_of(const Instance& inst, const std::string& r, const std::string& h) -> Edge {
  return {resident(inst, r), hospital(inst, h)};
}

// Seeded corpus of small instances: 2-6 residents, 1-4 hospitals, at most 12
// edges, ties up to 3, quotas 0-2 (mostly 1).
struct SweepCase {
  std::uint64_t seed;
  Instance instance;
};

inline auto sweep_params(std::uint64_t seed) -> RandomInstanceParams {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomInstanceParams p;
  p.residents = pick(2, 6);
  p.hospitals = pick(1, 4);
  p.density = 0.4 + 0.1 * pick(0, 6);
  p.max_tie = pick(0, 4) == 0 ? 1 : pick(2, 3);
  p.quota_min = pick(0, 9) == 0 ? 0 : 1;
  p.quota_max = pick(0, 2) == 0 ? 2 : 1;
  p.max_edges = 12;
  return p;
}

inline auto sweep_corpus(int count, std::uint64_t base_seed = 1000) -> std::vector<SweepCase> {
  std::vector<SweepCase> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    out.push_back({seed, random_instance(sweep_params(seed), seed)});
  }
  return out;
}

// Like sweep_corpus, but every tie has length at most ell + 1.
inline auto bounded_tie_corpus(int count, int ell, std::uint64_t base_seed) -> std::vector<SweepCase> {
  std::vector<SweepCase> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    auto p = sweep_params(seed);
    p.max_tie = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(ell + 1));
    out.push_back({seed, random_instance(p, seed)});
  }
  return out;
}

}  // namespace hrht::testing

namespace hrht {

// gtest printer: partner index per resident, '-' for unmatched.
inline void PrintTo(const Matching& m, std::ostream* os) {
  *os << '{';
  for (int r = 0; r < m.num_residents(); ++r) {
    if (r) *os << ' ';
    if (auto h = m.partner(Resident{r}))
      *os << h->value();
    else
      *os << '-';
  }
  *os << '}';
}

}  // namespace hrht
