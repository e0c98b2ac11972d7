#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace incol {

/// Seeded generator with a fixed, documented algorithm: std::mt19937_64
/// (bit-exact across standard libraries) plus the helpers below, which avoid
/// the implementation-defined std distributions.
///
///   below(n): draw 64-bit words w until w < floor(2^64 / n) * n, return w % n.
///   shuffle:  Fisher-Yates from the back, swapping i with below(i + 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = (~std::uint64_t{0} / n) * n;
    std::uint64_t w;
    do {
      w = engine_();
    } while (w >= limit);
    return w % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace incol
