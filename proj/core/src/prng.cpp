#include "mrt/util/prng.hpp"

namespace mrt {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Prng::next() {
  return splitmix64(key_ ^ splitmix64(counter_++));
}

std::uint64_t Prng::below(std::uint64_t n) {
  // Rejection sampling keeps the distribution exact and replayable.
  std::uint64_t limit = n * (UINT64_MAX / n);
  for (;;) {
    std::uint64_t v = next();
    if (v < limit || limit == 0) return v % n;
  }
}

Prng Prng::split(std::uint64_t path) const {
  return Prng(splitmix64(key_ ^ splitmix64(~path)));
}

}  // namespace mrt
