#pragma once

#include <stdexcept>
#include <string>

namespace opint {

/// Failure raised by kernel operations on malformed or incompatible input.
class Error : public std::runtime_error {
public:
    enum class Kind {
        Composition,   // endpoints do not match
        Range,         // index outside 1..n
        Arity,         // tuple length disagrees with a preimage
        Truncation,    // arity exceeds the operad bound
        Invalid,       // structure fails its own axioms
        Input,         // malformed textual or JSON input
        SearchTooLarge
    };

    Error(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace opint
