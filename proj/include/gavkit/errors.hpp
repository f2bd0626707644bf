#pragma once

#include <stdexcept>
#include <string>

namespace gavkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class DimensionGuard : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NotQGorenstein : public Error {
 public:
  using Error::Error;
};

/// No rational u realizes the restricted anticanonical divisor on a cone.
class NotQGorensteinOnCone : public NotQGorenstein {
 public:
  NotQGorensteinOnCone(const std::string& what, std::string cone) : NotQGorenstein(what), cone_(std::move(cone)) {}
  const std::string& cone() const { return cone_; }

 private:
  std::string cone_;
};

class NotAmple : public Error {
 public:
  using Error::Error;
};

class NotQuasiprojectiveSetup : public Error {
 public:
  using Error::Error;
};

class MalformedFanCone : public Error {
 public:
  using Error::Error;
};

class DegenerateCell : public Error {
 public:
  using Error::Error;
};

class NotLatticeMeasurable : public Error {
 public:
  using Error::Error;
};

class InvalidData : public Error {
 public:
  using Error::Error;
};

/// Setting parameters whose instantiated data fails validation.
class InvalidCandidate : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

/// An internal consistency check failed (two routes disagree, etc.).
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace gavkit
