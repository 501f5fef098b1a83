#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdepth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor or operation received parameters outside its contract.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A real argument (typically an α level) fell outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two fuzzy numbers (or a number and a sample) live on different α-grids.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// The distribution is almost surely a single fuzzy number.
class DegenerateDistribution : public Error {
public:
    using Error::Error;
};

/// Raw endpoint arrays do not describe an element of F_c(R).
class ValidationError : public Error {
public:
    enum class Reason { not_nested, empty_cut, not_compact };

    ValidationError(Reason reason, std::size_t level, const std::string& what)
        : Error(what), reason_(reason), level_(level) {}

    Reason reason() const noexcept { return reason_; }
    std::size_t level() const noexcept { return level_; }

private:
    Reason reason_;
    std::size_t level_;
};

inline const char* to_string(ValidationError::Reason r) {
    switch (r) {
        case ValidationError::Reason::not_nested: return "not nested";
        case ValidationError::Reason::empty_cut: return "empty cut";
        case ValidationError::Reason::not_compact: return "not compact";
    }
    return "invalid";
}

}  // namespace fdepth
