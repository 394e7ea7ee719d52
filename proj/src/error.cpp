#include "torsorkit/error.hpp"

namespace torsorkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BadPermutation: return "BadPermutation";
    case Errc::Singular: return "Singular";
    case Errc::ShapeError: return "ShapeError";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::LegCapExceeded: return "LegCapExceeded";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::TwistInvalid: return "TwistInvalid";
    case Errc::NotVerified: return "NotVerified";
    case Errc::CorestrictionFailure: return "CorestrictionFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MembershipFailure: return "MembershipFailure";
    case Errc::PhiNotIso: return "PhiNotIso";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::ReferenceHopfMismatch: return "ReferenceHopfMismatch";
    case Errc::WitnessRejected: return "WitnessRejected";
    case Errc::VerificationFailure: return "VerificationFailure";
    case Errc::HopfInvalid: return "HopfInvalid";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::DNotInvertible: return "DNotInvertible";
    case Errc::NotGaloisAction: return "NotGaloisAction";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::QNotPrimitive: return "QNotPrimitive";
    case Errc::AlphaBetaZero: return "AlphaBetaZero";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnknownRecipe: return "UnknownRecipe";
  }
  return "Unknown";
}

}  // namespace torsorkit
