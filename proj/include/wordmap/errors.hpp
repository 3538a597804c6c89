#pragma once

#include <stdexcept>

namespace wordmap {

// Bad user input: malformed spec files, out-of-range parameters, missing caches.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check that can only fail if the tables themselves are wrong.
// Callers treat this as an alarm, never as a negative verdict.
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wordmap
