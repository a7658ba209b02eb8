#pragma once

#include <stdexcept>
#include <string>

namespace melab {

// Error taxonomy shared by all modules.  The CLI maps these onto exit codes:
// usage/domain -> 2, numerical -> 3, I/O and network -> 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidWeightError : public Error {
public:
    using Error::Error;
};

class InsufficientPrecisionError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class NumericalFailureError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class NetworkError : public IoError {
public:
    using IoError::IoError;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace melab
