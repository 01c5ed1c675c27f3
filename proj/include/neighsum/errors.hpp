#pragma once

#include <stdexcept>

namespace neighsum {

// A structurally valid board specification that a routine cannot handle,
// e.g. Kronecker assembly of a Neumann board with more than two axes.
class UnsupportedSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace neighsum
