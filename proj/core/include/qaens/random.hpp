#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qaens {

/// xoshiro256** seeded through SplitMix64. Every draw the toolkit makes goes
/// through this generator so outputs are identical across platforms and
/// standard libraries (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, bound), bound > 0. Unbiased (modulo with rejection).
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform on [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;
  /// Uniform on [0, 1) with 53 bits of precision.
  double uniform01() noexcept;

  template <typename T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Mixes a seed with a label (FNV-1a over the label bytes, then SplitMix64),
/// so independent streams can be keyed by names such as a dataset or model id.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// k distinct indices drawn uniformly from [0, n), returned in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

}  // namespace qaens
