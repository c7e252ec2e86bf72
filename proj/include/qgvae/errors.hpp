#pragma once

#include <stdexcept>
#include <string>

namespace qgvae {

// Invalid configuration or mismatched model/config dimensions.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable, corrupt, or empty data sources.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized artifacts (token files, checkpoints).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values encountered during computation.
struct NumericFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qgvae
