#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace utsforge {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A transform row has a zero diagonal, a table ran out of rows, or a
// homeomorphism pair failed its inverse probe.
class InvalidTransform : public Error {
public:
    using Error::Error;
};

// The operation has no meaning for this transform kind.
class UnsupportedTransform : public Error {
public:
    using Error::Error;
};

// A compact-set spec violates 0 ∉ K or its parameter ranges.
class InvalidSet : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Missing, truncated or inconsistent run artifacts on disk.
class ArtifactError : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    FitError(const std::string& what, double best_error, int best_degree)
        : Error(what), best_error_(best_error), best_degree_(best_degree) {}

    double best_error() const noexcept { return best_error_; }
    int best_degree() const noexcept { return best_degree_; }

private:
    double best_error_;
    int best_degree_;
};

// No degree up to the cap reached the requested validation tolerance.
class MaxDegreeExceeded : public FitError {
public:
    using FitError::FitError;
};

// The orthonormal basis grew past the conditioning guard before the
// tolerance was met.
class IllConditioned : public FitError {
public:
    IllConditioned(const std::string& what, double best_error, int best_degree,
                   int last_safe_degree)
        : FitError(what, best_error, best_degree), last_safe_degree_(last_safe_degree) {}

    int last_safe_degree() const noexcept { return last_safe_degree_; }

private:
    int last_safe_degree_;
};

// A scheduler step could not certify its task; the state it was given is
// left untouched.
class ApproximationFailed : public Error {
public:
    using Error::Error;
};

}  // namespace utsforge
