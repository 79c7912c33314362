#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace infosum {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied configuration (grid sizes, tolerances, malformed input).
struct config_error : error {
    using error::error;
};

// A density failed a structural requirement (negative mass, non-finite
// values, zero total mass, ...).
struct invalid_density_error : error {
    using error::error;
};

// Grids are incompatible beyond repair: span ratio too large, or the
// resample needed to reconcile steps would exceed the memory cap.
struct resolution_error : error {
    using error::error;
};

// score() refused: too much probability mass below the validity floor, or
// the density has a jump at grid scale (not absolutely continuous as far
// as this grid can tell).
struct score_undefined_error : error {
    using error::error;
};

// An argument violates a stated precondition of the operation
// (e.g. unbalanced collection where a balanced one is required).
struct precondition_violation : error {
    using error::error;
};

// The quantity exists but the method's own applicability test failed;
// carries the offending subset when there is one.
struct not_evaluable_error : error {
    explicit not_evaluable_error(const std::string& msg,
                                 std::vector<int> offending = {})
        : error(msg), offending_set(std::move(offending)) {}
    std::vector<int> offending_set;
};

// Degenerate numeric argument (t <= 0 for heat flow, a == 0 for scaling, ...).
struct domain_error : error {
    using error::error;
};

}  // namespace infosum
