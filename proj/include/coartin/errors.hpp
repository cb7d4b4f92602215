#pragma once

#include <stdexcept>
#include <string>

namespace coartin {

/// A caller-supplied value violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// The generated subalgebra is not in A(m): it contains x^(m-1), so x^m K[x]
/// is not its conductor.
class NotInAmError : public ValidationError {
public:
    explicit NotInAmError(const std::string& what) : ValidationError(what) {}
};

/// A self-check inside the library failed. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace coartin
