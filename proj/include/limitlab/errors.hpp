#pragma once

#include <stdexcept>
#include <string>

namespace limitlab {

// Bad input: malformed scenario, unknown collection, out-of-range index.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The selected algorithm cannot run on this collection (e.g. no tell-tale
// rule for a probed index).
class InapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace limitlab
