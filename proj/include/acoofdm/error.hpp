#pragma once

#include <stdexcept>
#include <string>

namespace acoofdm {

/// Raised when a caller hands in parameters that no operation can honor:
/// non power-of-two block lengths, wrong bit counts, unknown names, etc.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace acoofdm
