#pragma once

#include <array>
#include <cstdint>

namespace repelwalk {

/// Coordinates of a reproducible random stream. A (seed, stream_id) pair
/// fully determines the draw sequence; distinct pairs give statistically
/// independent streams, so replicas can run in any order or in parallel.
struct RngStreamSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Philox4x64-10 counter-based generator (Salmon et al., SC'11).
///
/// The key is (seed, stream_id) and the 256-bit block counter starts at
/// zero, which makes the raw output bit-compatible with
/// numpy.random.Philox(counter=0, key=seed + (stream_id << 64)); the
/// known-answer vectors in the tests were produced that way.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id} {}
  explicit PhiloxStream(RngStreamSpec spec)
      : PhiloxStream(spec.seed, spec.stream_id) {}

  std::uint64_t next_u64() {
    if (idx_ == 4) refill();
    return block_[idx_++];
  }

  /// Uniform draw strictly inside (0, 1): the 53 high bits select one of
  /// 2^53 bins and the value is the bin midpoint, so 0 and 1 are unreachable.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  void refill() {
    // The counter advances before encryption; block k is the encryption of
    // counter value k+1, matching numpy's buffering order.
    if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) {
      ++counter_[3];
    }
    std::array<std::uint64_t, 4> c = counter_;
    std::uint64_t k0 = key_[0];
    std::uint64_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, c[0], hi0, lo0);
      mulhilo(kMul1, c[2], hi1, lo1);
      c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    block_ = c;
    idx_ = 0;
  }

  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> block_{};
  int idx_ = 4;
};

}  // namespace repelwalk
