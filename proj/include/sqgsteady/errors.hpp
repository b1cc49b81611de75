#pragma once

#include <stdexcept>
#include <string>

namespace sqgsteady {

// Base for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration or out-of-domain parameter (CLI exit 3).
struct config_error : error {
    using error::error;
};

// Grid too coarse for the requested mode count.
struct resolution_error : config_error {
    using config_error::config_error;
};

// Mode count incompatible with the grid (projection would alias).
struct aliasing_error : config_error {
    using config_error::config_error;
};

// Inverting a multiplier on a mode where its symbol vanishes.
struct singular_mode_error : error {
    using error::error;
};

// Evaluation requested exactly on a singular point of a kernel/profile.
struct singularity_error : error {
    using error::error;
};

// Non-finite value produced where a finite one is required.
struct numerical_error : error {
    using error::error;
};

// Input is effectively zero where a nonzero normalization is needed.
struct degenerate_input_error : error {
    using error::error;
};

// Log-log regression could not be performed (sign change in the window).
struct fit_error : error {
    using error::error;
};

// A verification suite produced a non-finite measurement.
struct suite_error : error {
    using error::error;
};

} // namespace sqgsteady
