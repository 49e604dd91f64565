#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqa {

enum class ErrorCode {
    SyntaxError = 1,
    UnknownSymbol,
    UnsupportedWord,
    DivisorVanishes,
    DenominatorVanishes,
    DivisionByZero,
    IndexOutOfRange,
    AlphaNotInvertible,
    InvalidOrder,
    Singular,
    UnsupportedFormat,
    InvalidArgument,
    ModeMismatch,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace wqa
