#include "sfcrel/rng.hpp"

#include <cmath>
#include <limits>

#include "sfcrel/errors.hpp"

namespace sfcrel {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("exponential rate must be positive and finite");
  }
  return -std::log1p(-uniform01()) / rate;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty integer range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw DomainError("uniform_int needs lo <= hi");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                               lo + 1);
  return static_cast<int>(lo + static_cast<std::int64_t>(below(span)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sfcrel
