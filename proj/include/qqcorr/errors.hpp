#pragma once

#include <stdexcept>
#include <string>

namespace qqcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical precondition failures (non-Hermitian input, negative spectrum, overflow).
class NumericalError : public Error {
public:
    using Error::Error;
};

class NotHermitian : public NumericalError {
public:
    explicit NotHermitian(const std::string& what) : NumericalError("not Hermitian: " + what) {}
};

class NotPSD : public NumericalError {
public:
    explicit NotPSD(const std::string& what) : NumericalError("not positive semidefinite: " + what) {}
};

class InvalidTemperature : public Error {
public:
    explicit InvalidTemperature(double t)
        : Error("temperature must be positive and finite, got " + std::to_string(t)) {}
};

class OverflowGuard : public NumericalError {
public:
    explicit OverflowGuard(const std::string& what) : NumericalError("overflow: " + what) {}
};

class InvalidRotation : public Error {
public:
    explicit InvalidRotation(const std::string& what) : Error("invalid rotation: " + what) {}
};

class NoBracket : public Error {
public:
    explicit NoBracket(const std::string& what) : Error("no bracket: " + what) {}
};

class UnknownPreset : public Error {
public:
    explicit UnknownPreset(const std::string& name) : Error("unknown preset '" + name + "'") {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

}  // namespace qqcorr
