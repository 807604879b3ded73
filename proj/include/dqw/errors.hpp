#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dqw {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Metric is not (+,-) with x0 time-like and x1 space-like at some point.
class SignatureError : public Error {
public:
  SignatureError(const std::string& what, double x0, double x1)
      : Error(what), x0_(x0), x1_(x1) {}
  double x0() const { return x0_; }
  double x1() const { return x1_; }

private:
  double x0_;
  double x1_;
};

class GaugeConditionError : public Error {
public:
  using Error::Error;
};

// Advection field changes sign across sites; no upwind direction exists.
class MixedSignError : public Error {
public:
  using Error::Error;
};

class SizeError : public Error {
public:
  using Error::Error;
};

class PacketTooWideError : public Error {
public:
  using Error::Error;
};

class EmptyComponentError : public Error {
public:
  using Error::Error;
};

class ConfigMismatchError : public Error {
public:
  using Error::Error;
};

class ExpressionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, std::string key)
      : Error(what), line_(line), key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

private:
  int line_;
  std::string key_;
};

class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

}  // namespace dqw
