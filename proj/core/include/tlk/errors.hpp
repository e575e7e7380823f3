#pragma once

#include <stdexcept>
#include <string>

namespace tlk {

// Base for every error raised by the library. Budget errors get their own
// branch so the CLI can map them onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

#define TLK_DEFINE_ERROR(Name, Base)          \
  class Name : public Base {                  \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Base(std::string(#Name ": ") + what) {} \
  }

TLK_DEFINE_ERROR(DivisionByZero, Error);
TLK_DEFINE_ERROR(PoleAtSpecialization, Error);
TLK_DEFINE_ERROR(ParseError, Error);
TLK_DEFINE_ERROR(UnsupportedOrbitShape, Error);
TLK_DEFINE_ERROR(NonSphericalSupport, Error);
TLK_DEFINE_ERROR(InconsistentFamily, Error);
TLK_DEFINE_ERROR(UnderdeterminedFamily, Error);
TLK_DEFINE_ERROR(NotSigmaStable, Error);
TLK_DEFINE_ERROR(DecompositionMismatch, Error);
TLK_DEFINE_ERROR(UnrecognizedConfiguration, Error);
TLK_DEFINE_ERROR(UnsupportedOrbitType, Error);
TLK_DEFINE_ERROR(RootBudgetExceeded, BudgetError);
TLK_DEFINE_ERROR(BudgetExceeded, BudgetError);

#undef TLK_DEFINE_ERROR

}  // namespace tlk
