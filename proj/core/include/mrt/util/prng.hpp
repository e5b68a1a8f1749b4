#pragma once

#include <cstdint>

namespace mrt {

// Counter-based splittable generator (SplitMix64 core). A stream is the pair
// (key, counter); child streams are derived by hashing the parent key with a
// path index, so recursive computations get independent, replayable streams.
class Prng {
 public:
  explicit Prng(std::uint64_t key = 0) : key_(key), counter_(0) {}

  std::uint64_t next();
  // value in [0, n), n > 0
  std::uint64_t below(std::uint64_t n);

  Prng split(std::uint64_t path) const;

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace mrt
