#pragma once

#include <stdexcept>
#include <string>

namespace spinor_epr {

enum class ErrorKind {
    NotHermitian,
    NegativeEigenvalue,
    DimensionMismatch,
    NotNormalized,
    NotDensityMatrix,
    OffShell,
    NotNormalizedSpinor,
    NonUnitAxis,
    SingularKinematics,
    MomentumNotConserved,
    ZeroMomentumTransfer,
    ZeroSeparation,
    StepTooLarge,
    NonPositiveInput,
    NonPositiveR,
    NotAtRest,
    IndefiniteInitialSpin,
    ZeroState,
    NonOrthogonalSpinBasis,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type carrying a structured kind; what() is
/// "<KindName>: <detail>".
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace spinor_epr
