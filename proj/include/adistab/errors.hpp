#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adistab {

// Malformed input: non-square, asymmetric, dimension mismatch.
class StructuralError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A value outside the domain an operation is defined on.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised in strict mode when a time step produces a non-finite value.
class InstabilityError : public std::runtime_error
{
public:
    InstabilityError(std::size_t step_index, const std::string& what)
        : std::runtime_error(what), step_(step_index)
    {}

    std::size_t step_index() const noexcept { return step_; }

private:
    std::size_t step_;
};

// Internal consistency check failed (e.g. a real transform returned
// a large imaginary part).
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace adistab
