#pragma once

#include <stdexcept>
#include <string>

namespace lemniscate {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, out-of-range value).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; the computation that produced the
/// inputs is wrong, not the caller.
class PipelineError : public Error {
public:
    using Error::Error;
};

/// A numeric method could not reach the requested precision within budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace lemniscate
