#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torsorkit {

enum class Errc {
  DivisionByZero,
  ParseError,
  ModulusMismatch,
  ArityMismatch,
  BadPermutation,
  Singular,
  ShapeError,
  CapExceeded,
  LegCapExceeded,
  NotInvertible,
  SearchSpaceTooLarge,
  NotAGroup,
  TwistInvalid,
  NotVerified,
  CorestrictionFailure,
  DimensionMismatch,
  MembershipFailure,
  PhiNotIso,
  NotEquivariant,
  ReferenceHopfMismatch,
  WitnessRejected,
  VerificationFailure,
  HopfInvalid,
  BadCharacteristic,
  DNotInvertible,
  NotGaloisAction,
  NotSeparable,
  QNotPrimitive,
  AlphaBetaZero,
  UnsupportedVersion,
  IndexOutOfRange,
  UnknownRecipe,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SingularError : public Error {
 public:
  SingularError(std::size_t kernel_dim, const std::string& what)
      : Error(Errc::Singular, what + " (kernel dimension " +
                                  std::to_string(kernel_dim) + ")"),
        kernel_dim_(kernel_dim) {}

  std::size_t kernel_dim() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

}  // namespace torsorkit
