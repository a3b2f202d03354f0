#pragma once

// Information-rate sweeps over an SNR grid (sigma = 1).

#include <acoofdm/ber_sweep.hpp>
#include <acoofdm/csv.hpp>
#include <acoofdm/discrete_rate.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/gaussian_model.hpp>

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

namespace acoofdm {

enum class RateMethod { closed_form, quadrature, monte_carlo };

inline std::string to_string(RateMethod m) {
    switch (m) {
        case RateMethod::closed_form: return "closed-form";
        case RateMethod::quadrature: return "quadrature";
        case RateMethod::monte_carlo: return "monte-carlo";
    }
    return "?";
}

struct RatePoint {
    double snr_o_db = 0.0;
    double snr_e_db = 0.0;
    std::string quantity;
    std::string input;  // "gaussian" or a constellation name
    RateMethod method = RateMethod::closed_form;
    double value = 0.0;  // bits per channel use, or dB for gain rows
    double error = 0.0;
};

/// Quantities a Gaussian-input sweep can emit.
inline const std::vector<std::string>& gaussian_quantities() {
    static const std::vector<std::string> q{
        "rate_conventional", "rate_improved", "delta",       "relative_gain",      "gain_optical_db",
        "gain_electrical_db", "rate_clipped_pam", "genie_bound", "capacity_asymptote",
    };
    return q;
}

/// Quantities a discrete-constellation sweep can emit.
inline const std::vector<std::string>& discrete_quantities() {
    static const std::vector<std::string> q{"rate_conventional", "rate_upper_bound", "genie_bound"};
    return q;
}

struct RateSweepConfig {
    std::string input = "gaussian";  // or a constellation name such as qam16
    std::vector<double> snr_db;
    SnrAxis axis = SnrAxis::optical;
    std::vector<std::string> quantities;  // empty: all quantities of the input
    QuadratureSpec quad{};
    unsigned threads = 0;

    bool gaussian() const { return input == "gaussian"; }

    std::vector<std::string> selected() const {
        const auto& all = gaussian() ? gaussian_quantities() : discrete_quantities();
        if (quantities.empty()) return all;
        for (const auto& q : quantities)
            if (std::find(all.begin(), all.end(), q) == all.end())
                throw ConfigError("quantity '" + q + "' is not available for input '" + input + "'");
        return quantities;
    }

    void validate() const {
        quad.validate();
        for (double s : snr_db)
            if (!std::isfinite(s)) throw ConfigError("SNR grid contains a non-finite value");
        if (!gaussian()) Constellation::parse(input);
        selected();
    }
};

namespace detail {

inline std::vector<RatePoint> rate_rows_at(const RateSweepConfig& cfg, double db,
                                           const std::vector<std::string>& wanted) {
    const auto op = operating_point(db, cfg.axis);
    const double e = op.mean_intensity(), s = op.sigma;
    auto want = [&](const char* q) { return std::find(wanted.begin(), wanted.end(), q) != wanted.end(); };
    std::vector<RatePoint> rows;
    auto emit = [&](const char* q, RateMethod m, Estimate v) {
        rows.push_back({op.snr_optical_db, op.snr_electrical_db, q, cfg.input, m, v.value, v.error});
    };

    if (cfg.gaussian()) {
        const double conv = rate_conventional_gaussian(e, s);
        const bool need_delta = want("rate_improved") || want("delta") || want("relative_gain");
        const Estimate d = need_delta ? delta_gain(GaussianClipModel::from_mean_intensity(e, s), cfg.quad) : Estimate{};
        if (want("rate_conventional")) emit("rate_conventional", RateMethod::closed_form, {conv, 0.0});
        if (want("rate_improved")) emit("rate_improved", RateMethod::quadrature, {conv + d.value, d.error});
        if (want("delta")) emit("delta", RateMethod::quadrature, d);
        if (want("relative_gain")) emit("relative_gain", RateMethod::quadrature, {d.value / conv, d.error / conv});
        if (want("gain_optical_db") || want("gain_electrical_db")) {
            const auto g = optical_gain_db(e, s, cfg.quad);
            if (want("gain_optical_db")) emit("gain_optical_db", RateMethod::quadrature, g);
            if (want("gain_electrical_db")) emit("gain_electrical_db", RateMethod::quadrature, {2.0 * g.value, 2.0 * g.error});
        }
        if (want("rate_clipped_pam")) emit("rate_clipped_pam", RateMethod::quadrature, rate_clipped_pam(e, s, cfg.quad));
        if (want("genie_bound")) emit("genie_bound", RateMethod::closed_form, {rate_genie_gaussian(e, s), 0.0});
        if (want("capacity_asymptote"))
            emit("capacity_asymptote", RateMethod::closed_form, {capacity_high_snr_asymptote(e, s), 0.0});
    } else {
        const auto c = Constellation::parse(cfg.input);
        if (want("rate_conventional")) emit("rate_conventional", RateMethod::quadrature, rate_discrete_conventional(c, e, s));
        if (want("rate_upper_bound")) emit("rate_upper_bound", RateMethod::quadrature, rate_upper_bound_discrete(c, e, s, cfg.quad));
        if (want("genie_bound")) emit("genie_bound", RateMethod::quadrature, rate_genie_bound(c, e, s));
    }
    return rows;
}

}  // namespace detail

/// Rows come back SNR-major in grid order, quantities in catalogue order.
inline std::vector<RatePoint> run_rate_sweep(const RateSweepConfig& cfg) {
    cfg.validate();
    const auto wanted = cfg.selected();
    std::vector<std::vector<RatePoint>> per_point(cfg.snr_db.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < per_point.size();)
            per_point[i] = detail::rate_rows_at(cfg, cfg.snr_db[i], wanted);
    };
    const unsigned nt = std::min<std::size_t>(resolve_threads(cfg.threads), std::max<std::size_t>(per_point.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<RatePoint> out;
    for (auto& v : per_point) out.insert(out.end(), v.begin(), v.end());
    return out;
}

inline std::vector<CsvRow> to_csv_rows(const std::vector<RatePoint>& pts) {
    std::vector<CsvRow> rows;
    for (const auto& p : pts)
        rows.push_back({p.snr_o_db, p.snr_e_db, p.quantity, p.input + ":" + to_string(p.method), p.value,
                        p.value - p.error, p.value + p.error, "error=" + format_number(p.error)});
    return rows;
}

}  // namespace acoofdm
