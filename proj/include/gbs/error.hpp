#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbs {

/// Raised when an operation's precondition fails on otherwise well-typed input.
class GbsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text readers; the message carries the source name and line.
class ParseError : public GbsError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : GbsError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Overflow-checked integer helpers. Label products in long move sequences and
// word powers can leave the int64 range; silently wrapping would corrupt the group.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw GbsError("integer overflow in label arithmetic");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw GbsError("integer overflow in label arithmetic");
    return out;
}

}  // namespace gbs
