#include "hrht/random_instance.hpp"

#include <algorithm>
#include <random>

namespace hrht {

auto random_instance(const RandomInstanceParams& p, std::uint64_t seed) -> Instance {
  if (p.residents < 0 || p.hospitals < 0) throw std::invalid_argument("negative vertex count");
  if (p.density < 0 || p.density > 1) throw std::invalid_argument("density must lie in [0, 1]");
  if (p.max_tie < 1) throw std::invalid_argument("max tie must be at least 1");
  if (p.quota_min < 0 || p.quota_max < p.quota_min) throw std::invalid_argument("bad quota range");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p.density);
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < p.residents; ++r)
    for (int h = 0; h < p.hospitals; ++h)
      if (coin(rng)) edges.emplace_back(r, h);
  if (p.max_edges && static_cast<int>(edges.size()) > *p.max_edges) {
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(static_cast<std::size_t>(std::max(0, *p.max_edges)));
    std::sort(edges.begin(), edges.end());
  }

  InstanceBuilder b;
  std::uniform_int_distribution<int> quota(p.quota_min, p.quota_max);
  for (int r = 0; r < p.residents; ++r) b.add_resident("r" + std::to_string(r + 1));
  for (int h = 0; h < p.hospitals; ++h) b.add_hospital("h" + std::to_string(h + 1), quota(rng));

  std::vector<std::vector<Hospital>> rl(static_cast<std::size_t>(p.residents));
  std::vector<std::vector<Resident>> hl(static_cast<std::size_t>(p.hospitals));
  for (auto [r, h] : edges) {
    rl[static_cast<std::size_t>(r)].emplace_back(h);
    hl[static_cast<std::size_t>(h)].emplace_back(r);
  }
  for (int r = 0; r < p.residents; ++r) {
    auto& list = rl[static_cast<std::size_t>(r)];
    std::shuffle(list.begin(), list.end(), rng);
    b.set_preferences(Resident{r}, list);
  }
  std::uniform_int_distribution<int> tie(1, p.max_tie);
  for (int h = 0; h < p.hospitals; ++h) {
    auto& pool = hl[static_cast<std::size_t>(h)];
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::vector<Resident>> groups;
    std::size_t i = 0;
    while (i < pool.size()) {
      const auto len = std::min(pool.size() - i, static_cast<std::size_t>(tie(rng)));
      groups.emplace_back(pool.begin() + static_cast<std::ptrdiff_t>(i),
                          pool.begin() + static_cast<std::ptrdiff_t>(i + len));
      i += len;
    }
    b.set_preferences(Hospital{h}, std::move(groups));
  }
  return std::move(b).build();
}

}  // namespace hrht
