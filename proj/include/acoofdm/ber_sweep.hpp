#pragma once

// Monte-Carlo uncoded BER sweeps.
//
// Every (SNR point, receiver) cell runs its own frame stream. Frame k of a
// cell draws from seed derive_seed(master, snr, receiver, k), so a cell's
// result depends neither on the other cells in the sweep nor on the number
// of worker threads.

#include <acoofdm/channel.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/csv.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/receiver.hpp>
#include <acoofdm/snr.hpp>
#include <acoofdm/transmitter.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace acoofdm {

enum class SnrAxis { optical, electrical };

struct SimConfig {
    Scheme scheme = Scheme::aco;
    std::string constellation = "qam4";
    std::vector<ReceiverKind> receivers{ReceiverKind::conventional};
    std::size_t n = 64;
    std::vector<double> snr_db;
    SnrAxis axis = SnrAxis::optical;
    std::uint64_t max_frames = 100000;
    std::uint64_t target_errors = 200;
    std::uint64_t seed = 1;
    int dd_iterations = kDefaultDecisionIterations;
    unsigned threads = 0;  // 0: ACO_THREADS env var, else 1

    void validate() const {
        require_block_length(n);
        if (receivers.empty()) throw ConfigError("at least one receiver is required");
        for (double s : snr_db)
            if (!std::isfinite(s)) throw ConfigError("SNR grid contains a non-finite value");
        if (dd_iterations < 0) throw ConfigError("decision-directed iterations must be >= 0");
        FrameLayout(scheme, n).check_constellation(Constellation::parse(constellation));
    }
};

struct BerPoint {
    double snr_o_db = 0.0;
    double snr_e_db = 0.0;
    ReceiverKind receiver = ReceiverKind::conventional;
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    std::uint64_t frames = 0;
    double ber = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
};

struct Interval {
    double lo;
    double hi;
};

/// Wilson score interval for k successes in n trials (95% by default).
inline Interval wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054) {
    if (n == 0) return {0.0, 1.0};
    const double nd = static_cast<double>(n);
    const double p = static_cast<double>(k) / nd;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    const double centre = (p + z2 / (2.0 * nd)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
    return {k == 0 ? 0.0 : std::max(0.0, centre - half), k == n ? 1.0 : std::min(1.0, centre + half)};
}

inline SnrOperatingPoint operating_point(double db, SnrAxis axis) {
    return axis == SnrAxis::optical ? SnrOperatingPoint::from_optical_db(db) : SnrOperatingPoint::from_electrical_db(db);
}

/// Stable per-point key derived from the SNR value itself.
inline std::uint64_t snr_key(double db) { return static_cast<std::uint64_t>(std::llround(db * 1e6)); }

/// Simulates one (SNR, receiver) cell.
inline BerPoint simulate_point(const SimConfig& cfg, double db, ReceiverKind rx) {
    const auto op = operating_point(db, cfg.axis);
    const FrameLayout layout(cfg.scheme, cfg.n);
    const auto c = Constellation::parse(cfg.constellation);
    const ChannelSpec ch{op.sigma};
    const RxContext ctx{layout, c, layout.symbol_scale(op.sigma_x)};
    const std::size_t nbits = layout.bits_per_frame(c);

    BerPoint pt;
    pt.snr_o_db = op.snr_optical_db;
    pt.snr_e_db = op.snr_electrical_db;
    pt.receiver = rx;
    BitVector bits(nbits);
    std::bernoulli_distribution coin(0.5);
    while (pt.frames < cfg.max_frames && pt.errors < cfg.target_errors) {
        Rng rng(derive_seed({cfg.seed, snr_key(db), static_cast<std::uint64_t>(rx), pt.frames}));
        for (auto& b : bits) b = coin(rng) ? 1 : 0;
        const auto frame = transmit(layout, bits, c, op.sigma_x);
        const auto r = channel(frame.channel_input(), ch, rng);
        const SignPattern signs = needs_genie_signs(rx) ? true_signs(frame, layout) : SignPattern{};
        const auto decided = receive(rx, ctx, r, signs, cfg.dd_iterations);
        for (std::size_t i = 0; i < nbits; ++i) pt.errors += decided[i] != bits[i];
        pt.bits += nbits;
        ++pt.frames;
    }
    pt.ber = pt.bits ? static_cast<double>(pt.errors) / static_cast<double>(pt.bits) : 0.0;
    const auto ci = wilson_interval(pt.errors, pt.bits);
    pt.ci_lo = ci.lo;
    pt.ci_hi = ci.hi;
    return pt;
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("ACO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Runs every (SNR, receiver) cell; rows come back SNR-major in grid order.
/// A zero frame budget yields an empty result.
inline std::vector<BerPoint> run_ber_sweep(const SimConfig& cfg) {
    cfg.validate();
    if (cfg.max_frames == 0) return {};
    const std::size_t cells = cfg.snr_db.size() * cfg.receivers.size();
    std::vector<BerPoint> out(cells);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells;)
            out[i] = simulate_point(cfg, cfg.snr_db[i / cfg.receivers.size()], cfg.receivers[i % cfg.receivers.size()]);
    };
    const unsigned nt = std::min<std::size_t>(resolve_threads(cfg.threads), std::max<std::size_t>(cells, 1));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
        worker();
    }
    return out;
}

inline std::vector<CsvRow> to_csv_rows(const std::vector<BerPoint>& pts, const SimConfig& cfg) {
    std::vector<CsvRow> rows;
    for (const auto& p : pts) {
        rows.push_back({p.snr_o_db, p.snr_e_db, "ber", to_string(p.receiver), p.ber, p.ci_lo, p.ci_hi,
                        "scheme=" + to_string(cfg.scheme) + ";constellation=" + cfg.constellation +
                            ";n=" + std::to_string(cfg.n) + ";errors=" + std::to_string(p.errors) +
                            ";bits=" + std::to_string(p.bits) + ";frames=" + std::to_string(p.frames)});
    }
    return rows;
}

/// SNR (dB, same axis as the points) at which a BER curve crosses `target`,
/// by linear interpolation of log10(BER) between the bracketing points.
/// `pick` selects the BER-like value of a point (ber, ci_lo or ci_hi).
/// Returns NaN when the curve does not cross.
template <class Pick>
double crossing_snr_db(const std::vector<BerPoint>& curve, double target, Pick&& pick, SnrAxis axis = SnrAxis::optical) {
    auto x = [&](const BerPoint& p) { return axis == SnrAxis::optical ? p.snr_o_db : p.snr_e_db; };
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double a = pick(curve[i]), b = pick(curve[i + 1]);
        if (a >= target && b < target && b > 0.0) {
            const double la = std::log10(a), lb = std::log10(b), lt = std::log10(target);
            return x(curve[i]) + (x(curve[i + 1]) - x(curve[i])) * (la - lt) / (la - lb);
        }
    }
    return std::nan("");
}

}  // namespace acoofdm
