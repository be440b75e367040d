#include "scrollkit/rng.hpp"

#include <limits>

namespace scrollkit {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(mix64(mix64(seed + kGolden) ^ (stream * 0xd6e8feb86659fd93ULL + 1))) {}

std::uint64_t Rng::next() { return mix64(key_ + kGolden * ++counter_); }

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rng Rng::fork(std::uint64_t stream) const {
  Rng child(seed_, 0);
  child.key_ = mix64(key_ ^ mix64(stream + 0x632be59bd9b4e019ULL));
  return child;
}

}  // namespace scrollkit
