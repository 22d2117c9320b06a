#pragma once

#include <stdexcept>
#include <string>

namespace esakia {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reflexive-transitive closure of the input relation has a nontrivial cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

class EmptyPoset : public Error {
 public:
  EmptyPoset() : Error("poset has no points") {}
};

/// A point index or name does not belong to the poset.
class ForeignPoint : public Error {
 public:
  using Error::Error;
};

/// Two values built over different posets were combined.
class PosetMismatch : public Error {
 public:
  PosetMismatch() : Error("operands belong to different posets") {}
};

/// An enumeration or search would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotAnUpset : public Error {
 public:
  using Error::Error;
};

/// An element index is outside the algebra it is used with.
class ForeignElement : public Error {
 public:
  using Error::Error;
};

/// Colour support is too deep in the truncation for the collapse experiment.
class SupportTooDeep : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace esakia
