#include "hecat/algebra/error.hpp"

namespace hecat {

std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::InvalidInvolution: return "InvalidInvolution";
    case Errc::MiddleMismatch: return "MiddleMismatch";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::UnsupportedContext: return "UnsupportedContext";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::ActionNotFitted: return "ActionNotFitted";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::InconsistentSamples: return "InconsistentSamples";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NonIntegralConvolution: return "NonIntegralConvolution";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
    case Errc::NotEquivalent: return "NotEquivalent";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::HeldOutMismatch: return "HeldOutMismatch";
    case Errc::NotHeckeConnected: return "NotHeckeConnected";
    case Errc::NoSelfDualBasis: return "NoSelfDualBasis";
    case Errc::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

bool is_usage_error(Errc c) {
    return static_cast<int>(c) <= static_cast<int>(Errc::ZeroEvaluationPoint);
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace hecat
