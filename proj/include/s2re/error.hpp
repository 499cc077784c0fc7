#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace s2re {

enum class Errc {
    InvalidArgument,
    InvalidShape,
    DegenerateShape,
    NoPositiveEigenvector,
    InvalidTranslation,
    Singular,
    RepulsivePotential,
    NoRoot,
    DegenerateDenominator,
    NonPositiveNu,
    NotARotator,
    SingularState,
    StepFailure,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::DegenerateShape: return "DegenerateShape";
    case Errc::NoPositiveEigenvector: return "NoPositiveEigenvector";
    case Errc::InvalidTranslation: return "InvalidTranslation";
    case Errc::Singular: return "Singular";
    case Errc::RepulsivePotential: return "RepulsivePotential";
    case Errc::NoRoot: return "NoRoot";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::NonPositiveNu: return "NonPositiveNu";
    case Errc::NotARotator: return "NotARotator";
    case Errc::SingularState: return "SingularState";
    case Errc::StepFailure: return "StepFailure";
    }
    return "Unknown";
}

} // namespace s2re
