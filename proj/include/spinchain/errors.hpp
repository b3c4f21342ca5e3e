#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// quadrature
struct NonConvergence : Error {
    NonConvergence(double estimate, double tolerance, int panels)
        : Error("quadrature did not converge: error estimate " + std::to_string(estimate) +
                " > tolerance " + std::to_string(tolerance) + " after " +
                std::to_string(panels) + " panels"),
          estimate(estimate), tolerance(tolerance), panels(panels) {}
    double estimate;
    double tolerance;
    int panels;
};

// spin-model
struct SeparationTooLarge : Error {
    explicit SeparationTooLarge(int r)
        : Error("spin separation r=" + std::to_string(r) + " exceeds supported maximum 100") {}
};
struct NotPositiveSemidefinite : Error {
    explicit NotPositiveSemidefinite(double min_eigenvalue)
        : Error("two-spin state has eigenvalue " + std::to_string(min_eigenvalue) +
                " below -1e-10; correlator inputs are inconsistent"),
          min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

// info-measures
struct InvalidState : Error {
    using Error::Error;
};
struct SingularDenominator : Error {
    explicit SingularDenominator(double value)
        : Error("closed-form QFI denominator " + std::to_string(value) +
                " within 1e-9 of zero; use the spectral route"),
          value(value) {}
    double value;
};
struct NonpositiveInformation : Error {
    explicit NonpositiveInformation(double F)
        : Error("Fisher information must be positive, got " + std::to_string(F)) {}
};

// ed-oracle
struct SizeOutOfRange : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};

// sweep-engine
struct TooFewPoints : Error {
    using Error::Error;
};
struct FlatSeries : Error {
    using Error::Error;
};

// cli config
struct ConfigError : Error {
    ConfigError(const std::string& what, std::string key, int line)
        : Error(what), key(std::move(key)), line(line) {}
    std::string key;
    int line;
};
struct UnknownKey : ConfigError {
    UnknownKey(const std::string& key, int line)
        : ConfigError("unknown key '" + key + "' at line " + std::to_string(line), key, line) {}
};
struct MissingKey : ConfigError {
    explicit MissingKey(const std::string& key)
        : ConfigError("missing required key '" + key + "'", key, 0) {}
};
struct BadValue : ConfigError {
    BadValue(const std::string& key, const std::string& value, int line)
        : ConfigError("bad value '" + value + "' for key '" + key + "' at line " +
                      std::to_string(line), key, line) {}
};

}  // namespace spinchain
