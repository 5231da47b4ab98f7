#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or enumeration limit was exceeded.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::string limit, const std::string& detail)
      : Error("bound exceeded: " + limit + " (" + detail + ")"), limit_(std::move(limit)) {}
  const std::string& limit() const { return limit_; }

 private:
  std::string limit_;
};

class NotTorsion : public Error {
 public:
  using Error::Error;
};

class NotDiagonal : public Error {
 public:
  NotDiagonal(const std::string& what, std::string first, std::string second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}
  // Two points of the same order carrying different coefficients.
  const std::string& first_witness() const { return first_; }
  const std::string& second_witness() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class MissingDivisor : public Error {
 public:
  using Error::Error;
};

class InfiniteFiber : public Error {
 public:
  using Error::Error;
};

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

}  // namespace mcf
