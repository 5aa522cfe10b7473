#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobloc {

/// Base class for every failure this library reports. The what() string
/// always carries a concrete witness (element indices, basis pairs, ...)
/// so batch drivers can print it verbatim.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// group-core
class NotAGroupError : public Error {
public:
  using Error::Error;
};
class NotNormalError : public Error {
public:
  using Error::Error;
};
class NotNilpotentError : public Error {
public:
  using Error::Error;
};
class NotPGroupError : public Error {
public:
  using Error::Error;
};

// action
class InvalidActionError : public Error {
public:
  using Error::Error;
};
class NotInvariantError : public Error {
public:
  using Error::Error;
};
class NotFrobeniusError : public Error {
public:
  using Error::Error;
};
class NoSuchSubgroupError : public Error {
public:
  using Error::Error;
};

// lie-core
class JacobiFailureError : public Error {
public:
  using Error::Error;
};
class AntisymmetryFailureError : public Error {
public:
  using Error::Error;
};
class OrderConsistencyError : public Error {
public:
  using Error::Error;
};
class NotInvertibleError : public Error {
public:
  using Error::Error;
};
class NotBracketPreservingError : public Error {
public:
  using Error::Error;
};

// grading
class NoRootOfUnityError : public Error {
public:
  using Error::Error;
};
class NotOrderPError : public Error {
public:
  using Error::Error;
};
class SingularSystemError : public Error {
public:
  using Error::Error;
};
class HypothesisViolatedError : public Error {
public:
  using Error::Error;
};

/// A proved statement failed on an instance satisfying its hypotheses.
/// Any throw of these two fails the whole suite.
class TheoremViolatedError : public Error {
public:
  using Error::Error;
};
class BoundViolatedError : public Error {
public:
  using Error::Error;
};

class IOError : public Error {
public:
  using Error::Error;
};

}  // namespace frobloc
