#pragma once

#include <stdexcept>
#include <string>

namespace bridgelife {

/// Precondition or out-of-range input.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raw measurements that are internally inconsistent (e.g. a negative
/// migration coefficient from a tiny penetration depth).
class MeasurementError : public std::runtime_error {
public:
    explicit MeasurementError(const std::string& what) : std::runtime_error(what) {}
};

/// Model parameters outside the model's own validity (e.g. rust/steel
/// density ratio that makes the critical rust mass unbounded).
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files: missing columns, bad JSON schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bridgelife
