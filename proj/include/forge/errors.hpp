#ifndef FORGE_ERRORS_HPP
#define FORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace forge {

// Caller-supplied data violates a documented precondition.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a documented size limit. Never a wrong answer: callers
// either get the exact result or this.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A produced object failed its own validity check.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction that is guaranteed to succeed did not; indicates a bug in
// the builder, not in the input.
struct contradiction_error : verification_error {
    explicit contradiction_error(const std::string& what) : verification_error(what) {}
};

}  // namespace forge

#endif
