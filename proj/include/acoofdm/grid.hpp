#pragma once

#include <acoofdm/error.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace acoofdm {

/// Parses "start:stop:step" (inclusive) or a comma-separated list of values.
inline std::vector<double> parse_grid(const std::string& text) {
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size() || !std::isfinite(v)) throw ConfigError("");
            return v;
        } catch (...) {
            throw ConfigError("bad number '" + s + "' in grid '" + text + "'");
        }
    };
    std::vector<double> out;
    if (text.empty()) return out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ConfigError("grid '" + text + "' must be start:stop:step");
        const double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
        if (!(step > 0.0) || b < a) throw ConfigError("grid '" + text + "' needs step > 0 and stop >= start");
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
        return out;
    }
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
    return out;
}

}  // namespace acoofdm
