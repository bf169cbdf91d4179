#pragma once

#include <stdexcept>

namespace recf {

// Malformed configuration input (flag, config file or cross-field check).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Output path cannot be created or written.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace recf
