// Error taxonomy matching the CLI exit codes: configuration problems exit 2,
// I/O problems exit 3, dataset validation findings exit 1 (reported, not
// thrown).
#pragma once

#include <stdexcept>

namespace floodsynth {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace floodsynth
