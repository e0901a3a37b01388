#pragma once

#include <array>
#include <cstdint>

namespace hypershadow::randgeom {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Output block i of a (key, stream) pair is a pure function of
// (key, stream, i), so substreams need no shared state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

// Deterministic random source identified by (seed, stream_id).
//
// Value type: copying a stream forks it at the current position. A stream
// must not be consumed from two threads; parallel code gives each unit of
// work its own stream_id instead.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() noexcept;

  // Uniform on the open interval (0, 1), 53 random bits.
  double next_uniform() noexcept;

  // Standard normal by inverse-CDF transform of next_uniform().
  double next_normal() noexcept;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace hypershadow::randgeom
