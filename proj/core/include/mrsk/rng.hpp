#pragma once

#include <cstdint>

#include "mrsk/rational.hpp"

namespace mrsk {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so any sample in a run can be reproduced independently.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform on {0, ..., bound-1}; exact via rejection. bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform on {lo, ..., hi} inclusive.
  long range(long lo, long hi);

  // Exact Bernoulli with rational p in [0, 1].
  bool bernoulli(const Rational& p);

  // Uniform on {0, ..., bound-1} for big integers; exact via rejection.
  Integer below_big(const Integer& bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mrsk
