#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qchannel {

// Base class for all domain errors. `code()` is the stable machine-readable
// identifier used in CLI error objects; `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& m) : Error("NotHermitian", m) {}
};

class TraceNotOne : public Error {
 public:
  explicit TraceNotOne(const std::string& m) : Error("TraceNotOne", m) {}
};

class NotPositive : public Error {
 public:
  explicit NotPositive(const std::string& m) : Error("NotPositive", m) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& m) : Error("IndexOutOfRange", m) {}
};

class AmplitudeOutOfRange : public Error {
 public:
  explicit AmplitudeOutOfRange(const std::string& m) : Error("AmplitudeOutOfRange", m) {}
};

class ConstraintViolated : public Error {
 public:
  explicit ConstraintViolated(const std::string& m) : Error("ConstraintViolated", m) {}
};

class ParameterOutOfRange : public Error {
 public:
  explicit ParameterOutOfRange(const std::string& m) : Error("ParameterOutOfRange", m) {}
};

class NotUnitary : public Error {
 public:
  explicit NotUnitary(const std::string& m) : Error("NotUnitary", m) {}
};

class NotRotation : public Error {
 public:
  explicit NotRotation(const std::string& m) : Error("NotRotation", m) {}
};

class NotUnitVector : public Error {
 public:
  explicit NotUnitVector(const std::string& m) : Error("NotUnitVector", m) {}
};

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& m) : Error("InvalidSpec", m) {}
};

}  // namespace qchannel
