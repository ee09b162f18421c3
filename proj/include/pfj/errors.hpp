#pragma once

#include <stdexcept>
#include <string>

namespace pfj {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OddDimensionError : public Error {
public:
    using Error::Error;
};

class NotSkewError : public Error {
public:
    using Error::Error;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

// Numerical rank failure; carries the reciprocal condition estimate that
// triggered it.
class SingularError : public Error {
public:
    SingularError(const std::string& what, double rcond)
        : Error(what), rcond_(rcond) {}
    double rcond() const { return rcond_; }

private:
    double rcond_ = 0.0;
};

class SingularComplementMomentError : public SingularError {
public:
    using SingularError::SingularError;
};

class ResolventSingularError : public SingularError {
public:
    using SingularError::SingularError;
};

class NegativeDeterminantError : public Error {
public:
    using Error::Error;
};

class PointOutsideIntervalError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class UnknownRuleError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace pfj
