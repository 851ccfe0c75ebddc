// Error taxonomy. Each class maps to one CLI exit code: domain/range/usage -> 2,
// convergence and failed verification -> 1, I/O -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside the mathematical domain of an operation (k < 2, s <= -1, ...)
struct DomainError : Error {
    using Error::Error;
};

// index outside a built table or schedule outside the checkable range
struct RangeError : Error {
    using Error::Error;
};

// malformed request: bad flag value, unparsable number, meaningless schedule entry
struct UsageError : Error {
    using Error::Error;
};

// a configured budget (terms, levels, table size) cannot reach the target
struct ResourceError : Error {
    using Error::Error;
};

// a table invariant failed during construction; `k` names the offending index
struct IntegrityError : Error {
    int k;
    IntegrityError(const std::string& msg, int k_) : Error(msg), k(k_) {}
};

// file could not be opened or written
struct IoError : Error {
    using Error::Error;
};

} // namespace mahler
