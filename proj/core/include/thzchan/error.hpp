#pragma once

#include <stdexcept>
#include <string>

namespace thz {

/// A computation was asked for outside its mathematical domain
/// (non-positive frequency, zero distance, inconsistent particle model...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A tabulated quantity was requested outside the tabulated interval.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A definition file or configuration could not be parsed.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name (material, detector, scenario) did not resolve.
class ResolutionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace thz
