#pragma once

#include <stdexcept>
#include <string>

namespace geofd {

// Thrown for invalid arguments, malformed inputs and out-of-range
// configuration. Maps to CLI exit code 1; everything else maps to 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace geofd
