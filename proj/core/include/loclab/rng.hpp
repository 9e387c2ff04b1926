#pragma once

#include <cstdint>

namespace loclab {

/// Counter-based random stream. A stream is fully determined by the
/// (master seed, trial index, realization index) triple it was derived
/// from, so independent trials can be generated in any order on any
/// number of threads and still produce identical draws.
class RngStream {
  public:
    RngStream() = default;
    explicit RngStream(std::uint64_t state) : state_(state) {}

    /// Derive the stream for one realization of one trial.
    static RngStream derive(std::uint64_t master_seed, std::uint64_t trial,
                            std::uint64_t realization);

    /// Fold extra key material into a seed (used for per-cell seeds in sweeps).
    static std::uint64_t mix_key(std::uint64_t seed, std::uint64_t salt);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double next_double();

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_ = 0;
};

} // namespace loclab
