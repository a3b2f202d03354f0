#pragma once

// Discrete-time optical intensity channel r = s + w, w ~ N(0, sigma^2), and
// the seed-derivation helpers every Monte-Carlo loop uses.

#include <acoofdm/blocks.hpp>
#include <acoofdm/error.hpp>

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace acoofdm {

using Rng = std::mt19937_64;

/// The channel gain is normalised to one.
struct ChannelSpec {
    double sigma = 1.0;

    void validate() const {
        if (!(sigma > 0.0)) throw ConfigError("channel noise sigma must be > 0");
    }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive hash of a seed path such as (master, snr_index, receiver, frame).
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (auto v : path) h = splitmix64(h ^ splitmix64(v));
    return h;
}

/// Adds IID Gaussian noise to every sample of `intensity`.
inline std::vector<double> channel(std::span<const double> intensity, const ChannelSpec& spec, Rng& rng) {
    spec.validate();
    std::normal_distribution<double> noise(0.0, spec.sigma);
    std::vector<double> r(intensity.begin(), intensity.end());
    for (auto& v : r) v += noise(rng);
    return r;
}

inline std::vector<double> channel(const IntensityBlock& s, const ChannelSpec& spec, Rng& rng) {
    return channel(std::span<const double>(s.samples), spec, rng);
}

}  // namespace acoofdm
