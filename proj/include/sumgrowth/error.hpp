#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumgrowth {

enum class ErrorKind {
    InvalidInput,
    InfiniteHeight,
    PrecisionFailure,
    BudgetExceeded,
    NotInSpan,
    NotDiagonalizable,
};

/// Machine-readable code used in CLI error objects, e.g. "infinite_height".
std::string_view error_code(ErrorKind kind) noexcept;

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorKind::InvalidInput, message);
}

}  // namespace sumgrowth
