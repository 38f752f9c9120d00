#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace graphcrit {

/// FNV-1a over bytes; stable across platforms, used to key generators by label.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Combine several words into one stream key.
std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts);

/// Counter-based generator: draw i of stream k is mix64(k, i), so any draw is
/// addressable without replaying the stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) : key_(key), counter_(counter) {}

  static CounterRng keyed(std::initializer_list<std::uint64_t> parts) {
    return CounterRng(stream_key(parts));
  }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; consumes two draws.
  double normal();
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace graphcrit
