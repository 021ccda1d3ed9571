#pragma once

#include <stdexcept>
#include <string>

namespace bibcount {

// Input file does not match the expected column layout.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A registered but unimplemented counting method was requested.
class NotImplementedError : public std::runtime_error {
 public:
  explicit NotImplementedError(const std::string& what)
      : std::runtime_error(what) {}
};

// An indicator or statistic was requested outside its domain.
class IndicatorDomainError : public std::domain_error {
 public:
  explicit IndicatorDomainError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace bibcount
