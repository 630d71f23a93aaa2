#pragma once

#include <cstdint>
#include <random>

namespace skewdual {

// Seedable generator handed around explicitly. Bounded draws use plain
// rejection so that a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t bound);
  double uniform01();

 private:
  std::mt19937_64 eng_;
};

}  // namespace skewdual
