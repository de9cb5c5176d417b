#pragma once

#include <stdexcept>
#include <string>

namespace smoothap {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a table or memory ceiling.
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A numerical solver failed to converge or bracket.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-system failure; the message always carries the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace smoothap
