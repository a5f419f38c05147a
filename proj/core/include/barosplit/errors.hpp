#pragma once

#include <stdexcept>
#include <string>

namespace barosplit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Field shape does not match the grid (or another field).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A layer thickness is zero/negative where positivity is required.
class InvalidThicknessError : public Error {
public:
    explicit InvalidThicknessError(const std::string& msg) : Error(msg) {}
};

/// A non-finite value appeared while advancing the model. Carries enough
/// context to report which stage and barotropic substep diverged.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& stage, int substep, const std::string& msg)
        : Error(msg), stage_(stage), substep_(substep) {}

    const std::string& stage() const { return stage_; }
    /// Substep index within a barotropic substepping run; -1 if not in one.
    int substep() const { return substep_; }

private:
    std::string stage_;
    int substep_;
};

/// Linear solver failure (zero pivot in the tridiagonal solve).
class SolverError : public Error {
public:
    explicit SolverError(const std::string& msg) : Error(msg) {}
};

/// Bad configuration input. Names the offending key and, when parsed from a
/// file, the line it came from (0 if not applicable).
class ConfigError : public Error {
public:
    ConfigError(const std::string& key, int line, const std::string& msg)
        : Error(msg), key_(key), line_(line) {}

    const std::string& key() const { return key_; }
    int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

/// Error metric is undefined (e.g. zero reference norm).
class MetricError : public Error {
public:
    explicit MetricError(const std::string& msg) : Error(msg) {}
};

} // namespace barosplit
