#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

// Malformed input: unknown names, kind mismatches, parse failures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symdyn

namespace symdyn {

class GluingError : public std::runtime_error {
 public:
  enum class Code {
    kDisjointnessViolation,
    kBorderNotZero,
    kGluingFailed,
    kScheduleDistanceViolation,
    kNoRepetitionFound,
    kModeNotAdmissible,
  };
  GluingError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace symdyn
