#pragma once

#include <cstdint>

namespace scrollkit {

/// Counter-based generator: output i is a mix of (key, i), so any stream can be
/// re-derived from (seed, stream id) without shared state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Independent stream keyed by this generator's seed and `stream`.
  Rng fork(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace scrollkit
