#pragma once

#include <stdexcept>
#include <string>

namespace moran {

/// Thrown when a computation is asked for outside the regime where it is
/// defined: an asymptotic formula whose base goes nonpositive, a root
/// bracket that does not exist, a sampler that exhausts its budget.
class RegimeViolation : public std::runtime_error {
public:
    explicit RegimeViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace moran
