#pragma once

// Exception types shared across the library. Everything derives from Error
// so callers can trap library failures in one clause and still tell the
// budget-style conditions apart from genuine domain errors.

#include <stdexcept>
#include <string>

namespace permutex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// iterate_fixed_point: the image of the seed letter must start with the seed
// and have length at least 2, otherwise no one-sided fixed point exists.
class NotProlongable : public Error {
 public:
  using Error::Error;
};

// shift_compare: the two shifts agree on every letter inside the depth
// budget, or a finite word ran out of letters first. Signals an exhausted
// budget, never equality of the shifts.
class UnresolvedComparison : public Error {
 public:
  using Error::Error;
};

// forward_image: the supplied ascent/descent word disagrees with the
// permutation it is paired with.
class InconsistentForm : public Error {
 public:
  using Error::Error;
};

// Operations that only make sense for a specific morphism shape, such as the
// index action of a uniform length-2 substitution.
class UnsupportedMorphism : public Error {
 public:
  using Error::Error;
};

// A closed-form statement was asked for outside its stated domain.
class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

// Stabilized scans: the doubling scan hit its cap before the observed set
// stopped growing.
class NonStabilized : public Error {
 public:
  using Error::Error;
};

// same_form_census: a form group broke the classification facts (more than
// two members, or a doubled group that is not a complementary pair of the
// predicted type). Indicates a bug, not a reportable outcome.
class CensusViolation : public Error {
 public:
  CensusViolation(const std::string& what, std::string form)
      : Error(what), form_(std::move(form)) {}
  const std::string& form() const { return form_; }

 private:
  std::string form_;
};

}  // namespace permutex
