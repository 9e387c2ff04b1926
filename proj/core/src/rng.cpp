#include "loclab/rng.hpp"

namespace loclab {
namespace {

// Finalizer from the splitmix64 generator (Vigna / Stafford mix13).
std::uint64_t mix64(std::uint64_t z)
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

} // namespace

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t trial,
                            std::uint64_t realization)
{
    std::uint64_t h = mix64(master_seed + kGolden);
    h = mix64(h ^ (trial + 0xD1B54A32D192ED03ULL));
    h = mix64(h ^ (realization + 0x8CB92BA72F3D8DD7ULL));
    return RngStream(h);
}

std::uint64_t RngStream::mix_key(std::uint64_t seed, std::uint64_t salt)
{
    return mix64(mix64(seed + kGolden) ^ (salt + 0xD1B54A32D192ED03ULL));
}

std::uint64_t RngStream::next_u64()
{
    state_ += kGolden;
    return mix64(state_);
}

double RngStream::next_double()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

} // namespace loclab
