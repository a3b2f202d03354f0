#pragma once

// Receiver suite: conventional, negative clipping, noise filtering, pairwise
// (with clipping), decision-directed combining and the genie receivers.
//
// Every receiver reduces the received samples to one estimate x_hat per
// pair (a, b) of channel uses, rebuilds the bipolar block from those
// estimates and detects the data subcarriers of its DFT. They differ only in
// how x_hat is formed:
//
//   conventional       r_a - r_b                               (= y1)
//   negative clipping  max(r_a,0) - max(r_b,0)
//   genie              r_a if x > 0 else -r_b                  (true sign)
//   genie + clipping   max(r_a,0) if x > 0 else -max(r_b,0)    (true sign)
//   noise filtering    genie rule with sign(y1)
//   pairwise clip      genie + clipping rule with sign(y1)
//   decision directed  genie rule with the sign of the block re-modulated
//                      from the previous decisions
//
// sgn(0) is taken as +1 throughout.

#include <acoofdm/blocks.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/transmitter.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace acoofdm {

/// y1 = r_a - r_b, y2 = r_a + r_b for each pair of the frame layout.
struct EquivalentObservation {
    std::vector<double> y1;
    std::vector<double> y2;
};

inline EquivalentObservation split_pairs(std::span<const double> received, const FrameLayout& layout) {
    if (received.size() != layout.channel_uses())
        throw ConfigError("expected " + std::to_string(layout.channel_uses()) + " received samples, got " +
                          std::to_string(received.size()));
    EquivalentObservation obs;
    obs.y1.reserve(layout.pairs().size());
    obs.y2.reserve(layout.pairs().size());
    for (auto [a, b] : layout.pairs()) {
        obs.y1.push_back(received[a] - received[b]);
        obs.y2.push_back(received[a] + received[b]);
    }
    return obs;
}

/// Inverse of split_pairs.
inline std::vector<double> reconstruct(const EquivalentObservation& obs, const FrameLayout& layout) {
    std::vector<double> r(layout.channel_uses(), 0.0);
    const auto pairs = layout.pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        r[pairs[p].first] = (obs.y2[p] + obs.y1[p]) / 2.0;
        r[pairs[p].second] = (obs.y2[p] - obs.y1[p]) / 2.0;
    }
    return r;
}

enum class ReceiverKind {
    conventional,
    negative_clipping,
    noise_filtering,
    pairwise_clip,
    decision_directed,
    genie,
    genie_clip,
};

inline constexpr ReceiverKind kAllReceivers[] = {
    ReceiverKind::conventional,  ReceiverKind::negative_clipping, ReceiverKind::noise_filtering,
    ReceiverKind::pairwise_clip, ReceiverKind::decision_directed, ReceiverKind::genie,
    ReceiverKind::genie_clip,
};

inline std::string to_string(ReceiverKind k) {
    switch (k) {
        case ReceiverKind::conventional: return "conventional";
        case ReceiverKind::negative_clipping: return "negative_clipping";
        case ReceiverKind::noise_filtering: return "noise_filtering";
        case ReceiverKind::pairwise_clip: return "pairwise_clip";
        case ReceiverKind::decision_directed: return "decision_directed";
        case ReceiverKind::genie: return "genie";
        case ReceiverKind::genie_clip: return "genie_clip";
    }
    return "?";
}

inline ReceiverKind parse_receiver(const std::string& s) {
    for (auto k : kAllReceivers)
        if (to_string(k) == s) return k;
    throw ConfigError("unknown receiver '" + s + "'");
}

inline bool needs_genie_signs(ReceiverKind k) {
    return k == ReceiverKind::genie || k == ReceiverKind::genie_clip;
}

/// What a receiver knows besides the samples: layout, alphabet and the
/// symbol amplitude used by the transmitter.
struct RxContext {
    const FrameLayout& layout;
    const Constellation& constellation;
    double symbol_scale;
};

/// Sign pattern of the bipolar values, one flag per pair (true = positive).
using SignPattern = std::vector<bool>;

inline SignPattern signs_of(std::span<const double> per_pair) {
    SignPattern s(per_pair.size());
    for (std::size_t p = 0; p < per_pair.size(); ++p) s[p] = per_pair[p] >= 0.0;
    return s;
}

/// True sign pattern of a transmitted frame; a zero sample counts as
/// negative, matching S == 0 in the genie selection rule.
inline SignPattern true_signs(const TxFrame& f, const FrameLayout& layout) {
    const auto v = layout.pair_values(f.bipolar);
    SignPattern s(v.size());
    for (std::size_t p = 0; p < v.size(); ++p) s[p] = v[p] > 0.0;
    return s;
}

namespace combine {

inline double pos(double v) { return v > 0.0 ? v : 0.0; }

inline std::vector<double> conventional(std::span<const double> r, const FrameLayout& layout) {
    return split_pairs(r, layout).y1;
}

inline std::vector<double> negative_clipping(std::span<const double> r, const FrameLayout& layout) {
    std::vector<double> x;
    for (auto [a, b] : layout.pairs()) x.push_back(pos(r[a]) - pos(r[b]));
    return x;
}

/// Selection with a known (or estimated) sign pattern.
inline std::vector<double> select(std::span<const double> r, const FrameLayout& layout, const SignPattern& positive,
                                  bool clip) {
    const auto pairs = layout.pairs();
    if (positive.size() != pairs.size()) throw ConfigError("sign pattern length does not match the frame");
    std::vector<double> x(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const double ra = r[pairs[p].first];
        const double rb = r[pairs[p].second];
        x[p] = positive[p] ? (clip ? pos(ra) : ra) : -(clip ? pos(rb) : rb);
    }
    return x;
}

}  // namespace combine

/// Per-subcarrier observations (unit-constellation scale) of a combined
/// estimate.
inline std::vector<Complex> frequency_observation(const RxContext& ctx, std::span<const double> per_pair) {
    const auto x = ctx.layout.bipolar_from_pairs(per_pair);
    return ctx.layout.symbols_from(dft(x), ctx.symbol_scale);
}

inline std::vector<unsigned> detect_labels(const RxContext& ctx, std::span<const double> per_pair) {
    const auto y = frequency_observation(ctx, per_pair);
    std::vector<unsigned> labels(y.size());
    for (std::size_t m = 0; m < y.size(); ++m) labels[m] = ctx.constellation.demap_label(y[m]);
    return labels;
}

inline BitVector labels_to_bits(const Constellation& c, std::span<const unsigned> labels) {
    BitVector bits;
    bits.reserve(labels.size() * c.bits_per_symbol());
    for (unsigned g : labels) c.append_label_bits(g, bits);
    return bits;
}

inline BitVector rx_conventional(const RxContext& ctx, const EquivalentObservation& obs) {
    return labels_to_bits(ctx.constellation, detect_labels(ctx, obs.y1));
}

inline BitVector rx_conventional(const RxContext& ctx, std::span<const double> received) {
    return rx_conventional(ctx, split_pairs(received, ctx.layout));
}

inline BitVector rx_negative_clipping(const RxContext& ctx, std::span<const double> received) {
    return labels_to_bits(ctx.constellation, detect_labels(ctx, combine::negative_clipping(received, ctx.layout)));
}

inline BitVector rx_noise_filtering(const RxContext& ctx, std::span<const double> received) {
    const auto obs = split_pairs(received, ctx.layout);
    const auto x = combine::select(received, ctx.layout, signs_of(obs.y1), false);
    return labels_to_bits(ctx.constellation, detect_labels(ctx, x));
}

inline BitVector rx_pairwise_clip(const RxContext& ctx, std::span<const double> received) {
    const auto obs = split_pairs(received, ctx.layout);
    const auto x = combine::select(received, ctx.layout, signs_of(obs.y1), true);
    return labels_to_bits(ctx.constellation, detect_labels(ctx, x));
}

inline constexpr int kDefaultDecisionIterations = 2;

inline std::vector<unsigned> decision_directed_labels(const RxContext& ctx, std::span<const double> received,
                                                      int iterations) {
    auto labels = detect_labels(ctx, combine::conventional(received, ctx.layout));
    std::vector<Complex> symbols(labels.size());
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t m = 0; m < labels.size(); ++m)
            symbols[m] = ctx.constellation.map_label(labels[m]) * ctx.symbol_scale;
        const auto regenerated = idft(ctx.layout.spectrum(symbols));
        const auto signs = signs_of(ctx.layout.pair_values(regenerated));
        auto next = detect_labels(ctx, combine::select(received, ctx.layout, signs, false));
        if (next == labels) break;
        labels = std::move(next);
    }
    return labels;
}

inline BitVector rx_decision_directed(const RxContext& ctx, std::span<const double> received,
                                      int iterations = kDefaultDecisionIterations) {
    if (iterations < 0) throw ConfigError("iteration count must be >= 0");
    return labels_to_bits(ctx.constellation, decision_directed_labels(ctx, received, iterations));
}

inline BitVector rx_genie(const RxContext& ctx, std::span<const double> received, const SignPattern& positive,
                          bool negative_clip) {
    return labels_to_bits(ctx.constellation,
                          detect_labels(ctx, combine::select(received, ctx.layout, positive, negative_clip)));
}

/// Dispatches to the named receiver. `positive` is only read by the genies.
inline BitVector receive(ReceiverKind kind, const RxContext& ctx, std::span<const double> received,
                         const SignPattern& positive, int iterations = kDefaultDecisionIterations) {
    switch (kind) {
        case ReceiverKind::conventional: return rx_conventional(ctx, received);
        case ReceiverKind::negative_clipping: return rx_negative_clipping(ctx, received);
        case ReceiverKind::noise_filtering: return rx_noise_filtering(ctx, received);
        case ReceiverKind::pairwise_clip: return rx_pairwise_clip(ctx, received);
        case ReceiverKind::decision_directed: return rx_decision_directed(ctx, received, iterations);
        case ReceiverKind::genie: return rx_genie(ctx, received, positive, false);
        case ReceiverKind::genie_clip: return rx_genie(ctx, received, positive, true);
    }
    throw ConfigError("unknown receiver");
}

}  // namespace acoofdm
