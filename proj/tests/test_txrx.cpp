#include "oracles.hpp"

#include <acoofdm/channel.hpp>
#include <acoofdm/receiver.hpp>
#include <acoofdm/snr.hpp>
#include <acoofdm/transmitter.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace acoofdm;

namespace {

struct Moments {
    double mean = 0.0, var = 0.0;
};

Moments moments(const std::vector<double>& v) {
    Moments m;
    for (double x : v) m.mean += x;
    m.mean /= static_cast<double>(v.size());
    for (double x : v) m.var += (x - m.mean) * (x - m.mean);
    m.var /= static_cast<double>(v.size() - 1);
    return m;
}

TxFrame random_frame(const FrameLayout& layout, const Constellation& c, double sx, Rng& rng) {
    return transmit(layout, oracle::random_bits(layout.bits_per_frame(c), rng), c, sx);
}

// Bit error rate of one receiver over `frames` frames at noise std sigma.
double ber(ReceiverKind rx, Scheme s, const Constellation& c, double sx, double sigma, int frames, std::uint64_t seed) {
    const FrameLayout layout(s, 64);
    Rng rng(seed);
    std::size_t errors = 0, bits = 0;
    for (int f = 0; f < frames; ++f) {
        const auto b = oracle::random_bits(layout.bits_per_frame(c), rng);
        const auto frame = transmit(layout, b, c, sx);
        const RxContext ctx{layout, c, frame.symbol_scale};
        const auto r = channel(frame.channel_input(), ChannelSpec{sigma}, rng);
        const auto d = receive(rx, ctx, r, true_signs(frame, layout));
        for (std::size_t i = 0; i < b.size(); ++i) errors += d[i] != b[i];
        bits += b.size();
    }
    return static_cast<double>(errors) / static_cast<double>(bits);
}

}  // namespace

TEST(TxAco, SamePointOnBothSubcarriersOfN4) {
    const auto c = Constellation::qam(4);
    const auto f = tx_aco(BitVector{0, 0}, c, 4, 1.0);
    const auto& s = f.intensity.front().samples;
    int zeros = 0;
    for (double v : s) {
        EXPECT_GE(v, 0.0);
        zeros += v == 0.0;
    }
    EXPECT_EQ(zeros, 2);
}

TEST(TxAco, ClippedMomentsMatchHalfGaussian) {
    const auto c = Constellation::qam(16);
    const FrameLayout layout(Scheme::aco, 64);
    Rng rng(21);
    const double sx = 1.7;
    double s1 = 0.0, s2 = 0.0, count = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const auto f = random_frame(layout, c, sx, rng);
        for (double v : f.intensity.front().samples) {
            s1 += v;
            s2 += v * v;
            ++count;
        }
    }
    EXPECT_NEAR(s1 / count, sx / std::sqrt(2.0 * std::numbers::pi), 0.01 * sx);
    EXPECT_NEAR(s2 / count, sx * sx / 2.0, 0.01 * sx * sx);
}

TEST(TxAco, RejectsBadArguments) {
    const auto c = Constellation::qam(4);
    EXPECT_THROW(tx_aco(BitVector(5), c, 16, 1.0), ConfigError);
    EXPECT_THROW(tx_aco(BitVector(8), c, 16, 0.0), ConfigError);
    EXPECT_THROW(tx_aco(BitVector(8), c, 12, 1.0), ConfigError);
}

TEST(TxFlip, BlocksArePositiveAndNegativeParts) {
    const auto c = Constellation::qam(16);
    const FrameLayout layout(Scheme::flip, 64);
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
        const auto f = random_frame(layout, c, 1.0, rng);
        ASSERT_EQ(f.intensity.size(), 2u);
        const auto& a = f.intensity[0].samples;
        const auto& b = f.intensity[1].samples;
        for (std::size_t i = 0; i < 64; ++i) {
            EXPECT_EQ(a[i] * b[i], 0.0);
            EXPECT_GE(a[i], 0.0);
            EXPECT_GE(b[i], 0.0);
            EXPECT_NEAR(a[i] - b[i], f.bipolar.samples[i], 1e-15);
        }
        EXPECT_LT(std::abs(f.freq.bins[0]), 1e-15);
        EXPECT_LT(std::abs(f.freq.bins[32]), 1e-15);
    }
}

TEST(TxPamDmt, SineOnlyAndImaginaryHalving) {
    const auto c = Constellation::pam(4);
    const FrameLayout layout(Scheme::pamdmt, 64);
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
        const auto f = random_frame(layout, c, 1.0, rng);
        const auto& x = f.bipolar.samples;
        EXPECT_NEAR(x[0], 0.0, 1e-12);
        EXPECT_NEAR(x[32], 0.0, 1e-12);
        for (std::size_t i = 1; i < 64; ++i) EXPECT_NEAR(x[i] + x[64 - i], 0.0, 1e-12);
        for (const auto& v : f.freq.bins) EXPECT_EQ(v.real(), 0.0);
        const auto spec = dft(TimeBlock{f.intensity.front().samples});
        for (std::size_t b = 1; b < 32; ++b) EXPECT_NEAR(spec.bins[b].imag(), f.freq.bins[b].imag() / 2.0, 1e-10);
    }
}

TEST(TxPamDmt, RequiresRealConstellation) {
    const FrameLayout layout(Scheme::pamdmt, 64);
    EXPECT_THROW(layout.check_constellation(Constellation::qam(4)), ConfigError);
    EXPECT_THROW(tx_pamdmt(BitVector(62), Constellation::qam(4), 64, 1.0), ConfigError);
}

TEST(Channel, TinyNoiseIsTransparent) {
    Rng rng(24);
    const std::vector<double> s{0.0, 1.0, 2.5, 0.0};
    const auto r = channel(s, ChannelSpec{1e-12}, rng);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(r[i], s[i], 1e-10);
}

TEST(Channel, NoiseVarianceAndDeterminism) {
    const std::vector<double> zero(100000, 0.0);
    Rng a(25), b(25);
    const auto r = channel(zero, ChannelSpec{0.7}, a);
    EXPECT_NEAR(moments(r).var, 0.49, 0.0049);
    EXPECT_EQ(r, channel(zero, ChannelSpec{0.7}, b));
    EXPECT_THROW(ChannelSpec{-1.0}.validate(), ConfigError);
}

TEST(Split, NoiselessGivesSignalAndMagnitude) {
    Rng rng(26);
    for (auto s : {Scheme::aco, Scheme::flip, Scheme::pamdmt}) {
        const FrameLayout layout(s, 64);
        const auto c = s == Scheme::pamdmt ? Constellation::pam(4) : Constellation::qam(16);
        const auto f = random_frame(layout, c, 1.0, rng);
        const auto obs = split_pairs(f.channel_input(), layout);
        const auto x = layout.pair_values(f.bipolar);
        for (std::size_t p = 0; p < x.size(); ++p) {
            EXPECT_NEAR(obs.y1[p], x[p], 1e-12);
            EXPECT_NEAR(obs.y2[p], std::abs(x[p]), 1e-12);
        }
    }
}

TEST(Split, NoiseTermsAreIndependentWithDoubledVariance) {
    const FrameLayout layout(Scheme::aco, 64);
    Rng rng(27);
    const std::vector<double> zero(64, 0.0);
    std::vector<double> z1, z2;
    for (int k = 0; k < 5000; ++k) {
        const auto obs = split_pairs(channel(zero, ChannelSpec{1.0}, rng), layout);
        z1.insert(z1.end(), obs.y1.begin(), obs.y1.end());
        z2.insert(z2.end(), obs.y2.begin(), obs.y2.end());
    }
    const auto m1 = moments(z1), m2 = moments(z2);
    EXPECT_NEAR(m1.var, 2.0, 0.02);
    EXPECT_NEAR(m2.var, 2.0, 0.02);
    double cov = 0.0;
    for (std::size_t i = 0; i < z1.size(); ++i) cov += (z1[i] - m1.mean) * (z2[i] - m2.mean);
    cov /= static_cast<double>(z1.size() - 1);
    EXPECT_LT(std::abs(cov / std::sqrt(m1.var * m2.var)), 0.01);
}

TEST(Split, RejectsWrongLength) {
    EXPECT_THROW(split_pairs(std::vector<double>(64), FrameLayout(Scheme::flip, 64)), ConfigError);
}

TEST(Receivers, NoiselessFramesDecodeExactly) {
    Rng rng(28);
    for (auto s : {Scheme::aco, Scheme::flip, Scheme::pamdmt}) {
        const FrameLayout layout(s, 64);
        for (auto c : s == Scheme::pamdmt ? std::vector{Constellation::pam(2), Constellation::pam(8)}
                                           : std::vector{Constellation::qam(4), Constellation::qam(64)}) {
            const auto bits = oracle::random_bits(layout.bits_per_frame(c), rng);
            const auto f = transmit(layout, bits, c, 1.0);
            const RxContext ctx{layout, c, f.symbol_scale};
            for (auto k : kAllReceivers)
                EXPECT_EQ(receive(k, ctx, f.channel_input(), true_signs(f, layout)), bits)
                    << to_string(s) << " " << c.name() << " " << to_string(k);
        }
    }
}

TEST(Receivers, PureNoiseGivesCoinFlips) {
    // The genies are excluded: their sign pattern alone carries information.
    for (auto k : kAllReceivers) {
        if (needs_genie_signs(k)) continue;
        EXPECT_NEAR(ber(k, Scheme::aco, Constellation::qam(4), 1.0, 1e4, 2000, 29), 0.5, 0.01);
    }
}

TEST(Receivers, ImprovedReceiversBeatConventional) {
    const auto c = Constellation::qam(16);
    const double sx = std::sqrt(2.0 * std::numbers::pi) * db_to_linear(4.5);
    const double conv = ber(ReceiverKind::conventional, Scheme::aco, c, sx, 1.0, 4000, 30);
    const double genie = ber(ReceiverKind::genie_clip, Scheme::aco, c, sx, 1.0, 4000, 30);
    for (auto k : kAllReceivers) {
        if (k == ReceiverKind::conventional) continue;
        const double b = ber(k, Scheme::aco, c, sx, 1.0, 4000, 30);
        EXPECT_LT(b, conv) << to_string(k);
        EXPECT_GE(b, genie) << to_string(k);
    }
}

TEST(Receivers, ZeroDecisionIterationsIsConventional) {
    const auto c = Constellation::qam(16);
    const FrameLayout layout(Scheme::aco, 64);
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        const auto f = random_frame(layout, c, 3.0, rng);
        const RxContext ctx{layout, c, f.symbol_scale};
        const auto r = channel(f.channel_input(), ChannelSpec{1.0}, rng);
        EXPECT_EQ(rx_decision_directed(ctx, r, 0), rx_conventional(ctx, r));
    }
    const RxContext ctx{layout, c, 1.0};
    EXPECT_THROW(rx_decision_directed(ctx, std::vector<double>(64), -1), ConfigError);
}

TEST(Receivers, CorrectSignSelectionHalvesNoiseVariance) {
    // With the true sign the selected sample carries noise of variance
    // sigma^2 instead of the 2 sigma^2 of y1; noise filtering coincides with
    // the genie wherever its sign decision is right.
    const auto c = Constellation::qam(16);
    const FrameLayout layout(Scheme::aco, 64);
    Rng rng(32);
    std::vector<double> e_genie, e_conv;
    std::size_t agree = 0, right = 0;
    for (int k = 0; k < 4000; ++k) {
        const auto f = random_frame(layout, c, 4.0, rng);
        const auto r = channel(f.channel_input(), ChannelSpec{1.0}, rng);
        const auto x = layout.pair_values(f.bipolar);
        const auto truth = true_signs(f, layout);
        const auto obs = split_pairs(r, layout);
        const auto est = signs_of(obs.y1);
        const auto g = combine::select(r, layout, truth, false);
        const auto nf = combine::select(r, layout, est, false);
        for (std::size_t p = 0; p < x.size(); ++p) {
            e_genie.push_back(g[p] - x[p]);
            e_conv.push_back(obs.y1[p] - x[p]);
            if (est[p] == truth[p]) {
                ++right;
                agree += nf[p] == g[p];
            }
        }
    }
    EXPECT_NEAR(moments(e_genie).var, 1.0, 0.02);
    EXPECT_NEAR(moments(e_conv).var, 2.0, 0.04);
    EXPECT_GT(right, e_genie.size() * 85 / 100);
    EXPECT_EQ(agree, right);
}

TEST(Receivers, NamesRoundTrip) {
    for (auto k : kAllReceivers) EXPECT_EQ(parse_receiver(to_string(k)), k);
    EXPECT_THROW(parse_receiver("oracle"), ConfigError);
    EXPECT_THROW(parse_scheme("dco"), ConfigError);
}
