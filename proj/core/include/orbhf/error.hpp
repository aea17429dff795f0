#pragma once

#include <stdexcept>
#include <string>

namespace orbhf {

enum class ErrorKind {
    IncompatibleIdempotents,
    UnknownGenerator,
    InvalidStructure,
    InvalidOrder,
    NotAComplex,
    NoBoundednessWitness,
    GenerationFailed,
    ParseError,
    DuplicateGenerator,
    UnknownToken,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace orbhf
