#ifndef SPHEREDIV_ERRORS_HPP
#define SPHEREDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spherediv {

/// Malformed or inconsistent input (bad JSON, wrong dimensions, non-orthogonal matrices).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured search budget (heights, tiling nodes, enumeration points) ran out
/// before an answer was reached. Never signals a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract, e.g. asking for a witness at an
/// obstructed degree.
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

} // namespace spherediv

#endif
