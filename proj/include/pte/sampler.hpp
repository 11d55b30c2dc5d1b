#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pte/game.hpp"

namespace pte {

/// SplitMix64 stream. All arithmetic is unsigned 64-bit, so the stream for a
/// given state is identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

 private:
  std::uint64_t state_;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream key: distinct (seed, index, lane) triples get
/// independent streams without any shared generator state, so batch workers
/// can draw any game directly.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
  std::uint64_t key = mix64(seed + 0x9e3779b97f4a7c15ULL);
  key = mix64(key ^ (index + 0xbf58476d1ce4e5b9ULL));
  key = mix64(key ^ (lane + 0x94d049bb133111ebULL));
  return key;
}

/// Fisher-Yates permutation of 1..count, driven by the given stream.
inline std::vector<std::int64_t> random_ranks(std::size_t count, SplitMix64& rng) {
  std::vector<std::int64_t> ranks(count);
  for (std::size_t i = 0; i < count; ++i) ranks[i] = static_cast<std::int64_t>(i) + 1;
  for (std::size_t i = count; i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(ranks[i], ranks[j]);
  }
  return ranks;
}

}  // namespace detail

struct SampleConfig {
  std::vector<int> shape;     // strategy counts per player
  std::uint64_t count = 0;    // games in the batch
  std::uint64_t seed = 0;
  bool symmetric = false;     // requires two players with equal strategy counts

  void validate() const {
    if (shape.empty()) throw std::invalid_argument("SampleConfig: empty shape");
    for (const int c : shape)
      if (c <= 0) throw std::invalid_argument("SampleConfig: strategy counts must be positive");
    if (symmetric && (shape.size() != 2 || shape[0] != shape[1]))
      throw std::invalid_argument("SampleConfig: symmetric sampling needs two players with equal strategy counts");
  }
};

/// Game `index` of the batch: each player's payoffs over the profiles are an
/// independent uniform permutation of 1..profile_count, so every sampled game
/// is in general position. Fully determined by (seed, index).
inline Game sample_game(const std::vector<int>& shape, std::uint64_t seed, std::uint64_t index) {
  SampleConfig config{shape, 1, seed, false};
  config.validate();
  std::size_t profiles = 1;
  for (const int c : shape) profiles *= static_cast<std::size_t>(c);

  const std::size_t players = shape.size();
  std::vector<Rational> payoffs(profiles * players);
  for (std::size_t player = 0; player < players; ++player) {
    SplitMix64 rng(detail::stream_key(seed, index, player));
    const std::vector<std::int64_t> ranks = detail::random_ranks(profiles, rng);
    for (std::size_t p = 0; p < profiles; ++p) payoffs[p * players + player] = Rational(ranks[p]);
  }
  return Game(shape, std::move(payoffs));
}

/// Two-player symmetric game on m strategies: player 0's payoffs are a
/// uniform permutation of 1..m*m and player 1 mirrors them across the
/// diagonal, so the result is symmetric and in general position.
inline Game sample_symmetric_game(int m, std::uint64_t seed, std::uint64_t index) {
  if (m <= 0) throw std::invalid_argument("sample_symmetric_game: strategy count must be positive");
  const auto um = static_cast<std::size_t>(m);
  const std::size_t profiles = um * um;
  SplitMix64 rng(detail::stream_key(seed, index, 0));
  const std::vector<std::int64_t> ranks = detail::random_ranks(profiles, rng);

  std::vector<Rational> payoffs(profiles * 2);
  for (std::size_t a = 0; a < um; ++a) {
    for (std::size_t b = 0; b < um; ++b) {
      payoffs[(a * um + b) * 2 + 0] = Rational(ranks[a * um + b]);
      payoffs[(a * um + b) * 2 + 1] = Rational(ranks[b * um + a]);
    }
  }
  return Game({m, m}, std::move(payoffs));
}

/// Batch entry point used by the scanner; honors the symmetric flag.
inline Game sample_from_config(const SampleConfig& config, std::uint64_t index) {
  config.validate();
  if (index >= config.count) throw std::out_of_range("sample_from_config: index beyond configured count");
  if (config.symmetric) return sample_symmetric_game(config.shape[0], config.seed, index);
  return sample_game(config.shape, config.seed, index);
}

}  // namespace pte
