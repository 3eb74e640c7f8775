#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace streamcut {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes several seed components into one; used for counter-based seed splits
/// so that adding trials never perturbs earlier trials' randomness.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(a);
  h = splitmix64(h ^ (b + 0x1f3d5b79a1e6c204ULL));
  h = splitmix64(h ^ (c + 0x8b72e3f16d9a4c35ULL));
  h = splitmix64(h ^ (d + 0x452821e638d01377ULL));
  return h;
}

// (a*key + b) mod p with p = 2^61 - 1. 2-wise independent over [p).
class PairwiseHash {
 public:
  PairwiseHash(std::uint64_t a, std::uint64_t b) : a_(a % kMersenne61), b_(b % kMersenne61) {
    if (a_ == 0) a_ = 1;
  }

  static PairwiseHash sample(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> da(1, kMersenne61 - 1);
    std::uniform_int_distribution<std::uint64_t> db(0, kMersenne61 - 1);
    std::uint64_t a = da(rng);
    std::uint64_t b = db(rng);
    return {a, b};
  }

  std::uint64_t raw(std::uint64_t key) const {
    unsigned __int128 x = static_cast<unsigned __int128>(a_) * (key % kMersenne61) + b_;
    std::uint64_t r = static_cast<std::uint64_t>(x & kMersenne61) +
                      static_cast<std::uint64_t>(x >> 61);
    r = (r & kMersenne61) + (r >> 61);
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
  }

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }

  friend bool operator==(const PairwiseHash&, const PairwiseHash&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

/// depth independent 2-wise rows, each mapping keys into [0, width).
class HashFamily {
 public:
  HashFamily(std::size_t depth, std::size_t width, std::uint64_t seed) : width_(width) {
    std::mt19937_64 rng(seed);
    rows_.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) rows_.push_back(PairwiseHash::sample(rng));
  }

  HashFamily(std::vector<PairwiseHash> rows, std::size_t width)
      : width_(width), rows_(std::move(rows)) {}

  std::size_t depth() const { return rows_.size(); }
  std::size_t width() const { return width_; }

  std::size_t bucket(std::size_t row, std::uint64_t key) const {
    return static_cast<std::size_t>(rows_[row].raw(key) % width_);
  }

  const std::vector<PairwiseHash>& rows() const { return rows_; }

  friend bool operator==(const HashFamily&, const HashFamily&) = default;

 private:
  std::size_t width_;
  std::vector<PairwiseHash> rows_;
};

}  // namespace streamcut
