#pragma once

#include <stdexcept>
#include <string>

namespace tripart {

// Caller passed parameters outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined evaluation, e.g. 0 raised to a negative power.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A formula product that must be a non-negative integer was not.
class FormulaError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Work would exceed a configured enumeration bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is legal in general but outside what this routine handles.
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Construction-plan failures raised by the decomposition replay.
class InvalidPlan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CycleRisk : public InvalidPlan {
 public:
  using InvalidPlan::InvalidPlan;
};

class IncompletePlan : public InvalidPlan {
 public:
  using InvalidPlan::InvalidPlan;
};

}  // namespace tripart
