#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecat {

// Every failure the library can report. Usage-type codes are input problems
// (bad strings, unsupported requests); the rest are mathematical refutations
// or integrity failures that the CLI reports with exit code 2.
enum class Errc {
    // usage
    ParseError,
    UnsupportedType,
    SizeLimitExceeded,
    GroupMismatch,
    InvalidInvolution,
    MiddleMismatch,
    EvenCharacteristic,
    UnsupportedContext,
    InvalidChain,
    ActionNotFitted,
    VariableMismatch,
    ZeroEvaluationPoint,
    // mathematical
    NonDivisible,
    NonIntegerCoefficients,
    InconsistentSamples,
    NotComparable,
    NonIntegralConvolution,
    CutoffTooSmall,
    NotEquivalent,
    ValidationFailed,
    HeldOutMismatch,
    NotHeckeConnected,
    NoSelfDualBasis,
    InternalInvariant,
};

std::string_view errc_name(Errc c);
bool is_usage_error(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

// Internal consistency check that stays on in release builds.
inline void ensure(bool ok, const char* what) {
    if (!ok) throw Error(Errc::InternalInvariant, what);
}

}  // namespace hecat
