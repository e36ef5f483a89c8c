#pragma once

#include <stdexcept>

namespace szego {

// Raised when a condition the underlying theory guarantees turns out false
// at runtime (e.g. overlapping root blocks in a partition composition).
// Callers map this to a different exit status than ordinary domain errors.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace szego
