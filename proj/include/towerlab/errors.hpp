#pragma once

#include <stdexcept>
#include <string>

namespace towerlab {

/// Exit codes used by the CLI. Library code throws the exception types
/// below; the CLI maps them to these codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitCapExceeded = 3,
    kExitDiscrepancy = 4,
    kExitPaperMismatch = 5,
};

/// A requested computation exceeds the configured desk-scale limits
/// (field size, materialized chain count, ...).
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes that must agree exactly did not.
/// This always signals an implementation bug, never bad input.
class DiscrepancyError : public std::logic_error {
public:
    explicit DiscrepancyError(const std::string& what) : std::logic_error(what) {}
};

/// Invalid run configuration (bad keys, unparsable values, missing sections).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A paper-comparison column failed to reproduce the published constant.
class PaperMismatchError : public std::runtime_error {
public:
    explicit PaperMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace towerlab
