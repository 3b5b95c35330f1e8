#pragma once

#include <cstddef>
#include <deque>
#include <random>
#include <utility>

#include "hrht/schedule.hpp"

namespace hrht::detail {

// Work list of agent indices honouring a Schedule.
class PendingQueue {
 public:
  explicit PendingQueue(const Schedule& schedule) {
    if (schedule.shuffle_seed) {
      random_ = true;
      rng_.seed(*schedule.shuffle_seed);
    }
  }

  void push(int agent) { items_.push_back(agent); }
  [[nodiscard]] bool empty() const { return items_.empty(); }

  int pop() {
    std::size_t at = 0;
    if (random_) {
      std::uniform_int_distribution<std::size_t> pick(0, items_.size() - 1);
      at = pick(rng_);
      std::swap(items_[at], items_.front());
    }
    int agent = items_.front();
    items_.pop_front();
    return agent;
  }

 private:
  std::deque<int> items_;
  bool random_ = false;
  std::mt19937_64 rng_;
};

}  // namespace hrht::detail
