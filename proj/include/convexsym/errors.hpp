#pragma once

#include <stdexcept>
#include <string>

namespace csym {

// Bad arguments: non-finite coordinates, mismatched dimensions, out-of-range
// indices.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// The request is well formed but exceeds what the exact pipeline handles
// (facet enumeration above dimension 4, ambient dimension above 8).
class UnsupportedDimension : public std::domain_error {
 public:
  explicit UnsupportedDimension(const std::string& what) : std::domain_error(what) {}
};

// A property/generator/operator combination that cannot be checked.
class ConfigurationError : public std::logic_error {
 public:
  explicit ConfigurationError(const std::string& what) : std::logic_error(what) {}
};

class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace csym
