#pragma once

#include <stdexcept>
#include <string>

#include "hrht/instance.hpp"
#include "hrht/schedule.hpp"

namespace hrht {

struct MinMaxSolution {
  QuotaVector quotas;  // max(q(h), |M'(h)|), at most q(h) + ell
  Matching matching;
  int ell = 0;
  int max_increase = 0;
};

// Raised when some hospital's tie is longer than ell + 1.
class TieBoundError : public std::invalid_argument {
 public:
  TieBoundError(std::string hospital, int rank, int tie_length, int ell);

  [[nodiscard]] const std::string& hospital() const { return hospital_; }
  [[nodiscard]] int rank() const { return rank_; }  // 1-based
  [[nodiscard]] int tie_length() const { return tie_length_; }
  [[nodiscard]] int minimum_ell() const { return tie_length_ - 1; }

 private:
  std::string hospital_;
  int rank_;
  int tie_length_;
};

// Resident-optimal ell-augmentation for instances whose ties have length at
// most ell + 1. Throws TieBoundError otherwise, and std::invalid_argument for ell < 0.
[[nodiscard]] MinMaxSolution minmax_bt(const Instance& inst, int ell, const Schedule& schedule = {});

}  // namespace hrht
