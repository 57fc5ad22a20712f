#pragma once

#include <stdexcept>
#include <string>

namespace pointnls {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the two-level condition (gamma < -1/a resp. 1/|g1|+1/|g2| < 2a) fails
struct NoTwoLevels : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootBracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InitialValueMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInitialData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// finite-time divergence of a charge trajectory; carries the first offending step
struct BlowupError : std::runtime_error {
    int step_index;
    BlowupError(int l, const std::string& what) : std::runtime_error(what), step_index(l) {}
};

} // namespace pointnls
