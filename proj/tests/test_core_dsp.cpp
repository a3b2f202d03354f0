#include "oracles.hpp"

#include <acoofdm/blocks.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/fft.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace acoofdm;

namespace {

std::vector<Complex> random_complex(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> x(n);
    for (auto& v : x) v = {g(rng), g(rng)};
    return x;
}

}  // namespace

TEST(Fft, ZeroMapsToZero) {
    const std::vector<Complex> z(16);
    for (const auto& v : dft(z)) EXPECT_EQ(v, Complex(0.0));
}

TEST(Fft, ImpulseIsFlatWithUnitaryScale) {
    std::vector<Complex> x(8);
    x[0] = 1.0;
    for (const auto& v : dft(x)) {
        EXPECT_NEAR(v.real(), 1.0 / std::sqrt(8.0), 1e-15);
        EXPECT_NEAR(v.imag(), 0.0, 1e-15);
    }
}

TEST(Fft, MatchesBruteForceDft) {
    std::mt19937_64 rng(3);
    for (std::size_t n : {4u, 8u, 16u, 64u, 256u}) {
        const auto x = random_complex(n, rng);
        const auto fast = dft(x);
        const auto slow = oracle::brute_dft(x);
        const auto back = oracle::brute_dft(fast, +1);
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-12) << "n=" << n << " k=" << k;
            EXPECT_LT(std::abs(back[k] - x[k]), 1e-12);
        }
    }
}

TEST(Fft, RoundTripAndParseval) {
    std::mt19937_64 rng(4);
    const auto x = random_complex(512, rng);
    const auto f = dft(x);
    const auto y = idft(f);
    double ex = 0.0, ef = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_LT(std::abs(y[i] - x[i]), 1e-12);
        ex += std::norm(x[i]);
        ef += std::norm(f[i]);
    }
    EXPECT_NEAR(ex, ef, 1e-10 * ex);
}

TEST(Fft, HermitianSpectrumGivesRealSignal) {
    std::mt19937_64 rng(5);
    const std::size_t n = 32;
    auto s = random_complex(n, rng);
    s[0] = s[0].real();
    s[n / 2] = s[n / 2].real();
    for (std::size_t k = 1; k < n / 2; ++k) s[n - k] = std::conj(s[k]);
    for (const auto& v : idft(s)) EXPECT_LT(std::abs(v.imag()), 1e-12);
}

TEST(Fft, RejectsNonPowerOfTwo) {
    EXPECT_THROW(dft(std::vector<Complex>(12)), ConfigError);
    EXPECT_THROW(idft(std::vector<Complex>(0)), ConfigError);
    EXPECT_THROW(require_block_length(2), ConfigError);
}

TEST(Blocks, AcoFrameOfOneSymbol) {
    const std::vector<Complex> one{1.0};
    const auto f = load_aco_frame(one, 4);
    ASSERT_EQ(f.bins.size(), 4u);
    EXPECT_EQ(f.bins[0], Complex(0.0));
    EXPECT_EQ(f.bins[1], Complex(1.0));
    EXPECT_EQ(f.bins[2], Complex(0.0));
    EXPECT_EQ(f.bins[3], Complex(1.0));

    const std::vector<Complex> j{Complex(0.0, 1.0)};
    const auto g = load_aco_frame(j, 4);
    EXPECT_EQ(g.bins[1], Complex(0.0, 1.0));
    EXPECT_EQ(g.bins[3], Complex(0.0, -1.0));
    EXPECT_LT(hermitian_residue(g), 1e-15);
}

TEST(Blocks, AcoFrameIsAntisymmetricInTime) {
    std::mt19937_64 rng(6);
    const std::size_t n = 64;
    const auto f = load_aco_frame(random_complex(n / 4, rng), n);
    const auto x = idft(f);
    for (std::size_t i = 0; i < n / 2; ++i) EXPECT_NEAR(x.samples[i], -x.samples[i + n / 2], 1e-12);
}

TEST(Blocks, AcoFrameRejectsWrongSymbolCount) {
    EXPECT_THROW(load_aco_frame(std::vector<Complex>(3), 16), ConfigError);
    EXPECT_THROW(load_aco_frame(std::vector<Complex>(3), 12), ConfigError);
}

TEST(Constellation, Qam4LabelZeroIsFirstQuadrant) {
    const auto c = Constellation::qam(4);
    const BitVector b{0, 0};
    EXPECT_NEAR(std::abs(c.map(b) - Complex(1.0, 1.0) / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Constellation, RoundTripEveryLabel) {
    for (auto c : {Constellation::qam(4), Constellation::qam(16), Constellation::qam(64), Constellation::qam(256),
                   Constellation::psk(2), Constellation::psk(8), Constellation::pam(2), Constellation::pam(4),
                   Constellation::pam(8)}) {
        for (unsigned g = 0; g < c.order(); ++g) {
            const auto bits = c.label_bits(g);
            EXPECT_EQ(c.demap_hard(c.map(bits)), bits) << c.name() << " label " << g;
        }
    }
}

TEST(Constellation, UnitEnergyZeroMean) {
    for (auto c : {Constellation::qam(16), Constellation::qam(64), Constellation::psk(8), Constellation::pam(4)}) {
        Complex mean = 0.0;
        double e = 0.0;
        for (auto p : c.points()) {
            mean += p;
            e += std::norm(p);
        }
        EXPECT_LT(std::abs(mean) / c.order(), 1e-12) << c.name();
        EXPECT_NEAR(e / c.order(), 1.0, 1e-12) << c.name();
    }
}

TEST(Constellation, GrayNeighboursDifferInOneBit) {
    for (auto c : {Constellation::qam(16), Constellation::qam(64), Constellation::pam(8), Constellation::psk(8)}) {
        double dmin = 1e9;
        for (unsigned a = 0; a < c.order(); ++a)
            for (unsigned b = a + 1; b < c.order(); ++b) dmin = std::min(dmin, std::abs(c.points()[a] - c.points()[b]));
        for (unsigned a = 0; a < c.order(); ++a)
            for (unsigned b = a + 1; b < c.order(); ++b) {
                if (std::abs(c.points()[a] - c.points()[b]) < dmin * (1.0 + 1e-9))
                    EXPECT_EQ(__builtin_popcount(a ^ b), 1) << c.name() << " " << a << "/" << b;
            }
    }
}

TEST(Constellation, SmallPerturbationStillDemaps) {
    const auto c = Constellation::qam(16);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    for (unsigned g = 0; g < 16; ++g)
        EXPECT_EQ(c.demap_label(c.points()[g] + Complex(u(rng), u(rng))), g);
}

TEST(Constellation, RejectsBadInput) {
    const auto c = Constellation::qam(16);
    EXPECT_THROW(c.map(BitVector{0, 1, 0}), ConfigError);
    EXPECT_THROW(Constellation::qam(8), ConfigError);
    EXPECT_THROW(Constellation::pam(3), ConfigError);
    EXPECT_THROW(Constellation::parse("ofdm16"), ConfigError);
    EXPECT_EQ(Constellation::parse("QAM-16").order(), 16u);
    EXPECT_EQ(Constellation::parse("psk8").order(), 8u);
}

TEST(Gray, EncodeDecodeInverse) {
    for (unsigned k = 0; k < 1024; ++k) {
        EXPECT_EQ(gray_decode(gray_encode(k)), k);
        EXPECT_EQ(__builtin_popcount(gray_encode(k) ^ gray_encode(k + 1)), 1);
    }
}
