#pragma once

#include <stdexcept>
#include <string>

namespace divbench {

// Preconditions on caller-supplied values (lengths, probabilities, config fields)
// are reported as std::invalid_argument. The types below cover the other failure
// classes.

/// An operation was asked to run on a population/state that cannot support it.
class InvalidStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A named entity (preset, algorithm) does not exist.
class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// File-system failure; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config validation failure that names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace divbench
