#pragma once

#include <stdexcept>
#include <string>

namespace viracomb {

// Bad parameters or malformed input. The CLI maps this to exit code 2.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tail height b is not a dark-band floor, so the path weight diverges.
struct InfiniteWeight : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// An internal consistency check failed (corrupted input to an inverse map,
// a broken stage invariant, an enumeration that did not stabilize).
// The CLI maps this to exit code 3.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw StructuralError(msg);
}

}  // namespace viracomb
