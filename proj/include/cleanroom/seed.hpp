#pragma once

// Seeded randomness with derivation paths.
//
// Every random stream is named by (root seed, label path). Deriving a child
// stream never perturbs the parent, so Monte Carlo trials can be sharded in
// any order (or across workers) without changing results.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cleanroom {

class Seed {
 public:
  Seed() = default;
  explicit Seed(std::uint64_t root) : root_(root) {}

  std::uint64_t root() const { return root_; }
  const std::vector<std::string>& path() const { return path_; }

  Seed derive(std::string_view label) const {
    Seed child = *this;
    child.path_.emplace_back(label);
    return child;
  }
  Seed derive(std::string_view label, std::uint64_t index) const {
    return derive(std::string(label) + "#" + std::to_string(index));
  }

  /// Stable 64-bit digest of (root, path); the PRNG seed.
  std::uint64_t digest() const {
    // FNV-1a over the root bytes then each label, with separators.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) mix((root_ >> (8 * i)) & 0xff);
    for (const std::string& label : path_) {
      mix(0x1f);
      for (unsigned char c : label) mix(c);
    }
    return h;
  }

 private:
  std::uint64_t root_ = 0;
  std::vector<std::string> path_;
};

/// The engine's only PRNG. mt19937_64 output is pinned by the standard, so
/// streams reproduce across platforms and compilers.
class RngStream {
 public:
  explicit RngStream(const Seed& seed) : gen_(seed.digest()) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Fill a buffer with raw draws (feeds the batched kernels).
  void fill(std::uint64_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = gen_();
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cleanroom
