#ifndef PDCOH_ERRORS_HPP
#define PDCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdcoh {

enum class ErrorKind {
    // input / parse problems (CLI exit code 1)
    ParseError,
    // validation problems (CLI exit code 2)
    InvalidCartanSpec,
    DimensionMismatch,
    GroupTooLarge,
    NotDominant,
    MuNotGaloisStable,
    FrameMismatch,
    InvalidMu,
    NotBasic,
    DenominatorNotDividing,
    EmptyPeriodDomain,
    GaloisIncompatible,
    DualBasisViolation,
    BadSubset,
    BadIndex,
    EmptyBoundary,
    EvenPrimeUnsupported,
    UnknownIndex,
    // conditions that must never occur on valid data (CLI exit code 3)
    OrbitInconsistency,
    InternalCheckFailed,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

inline void internal_check(bool cond, const std::string& message) {
    if (!cond) throw Error(ErrorKind::InternalCheckFailed, message);
}

}  // namespace pdcoh

#endif
