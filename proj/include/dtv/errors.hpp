#pragma once

#include <stdexcept>
#include <string>

namespace dtv {

// Machine-readable error taxonomy.  `code` feeds the CLI error records.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DTV_ERROR(NAME)                                                    \
    class NAME : public EngineError {                                      \
    public:                                                                \
        explicit NAME(const std::string& what) : EngineError(#NAME, what) {} \
    };

DTV_ERROR(DivisionByZero)
DTV_ERROR(NonLaurent)
DTV_ERROR(NoFit)
DTV_ERROR(AmbiguousFit)
DTV_ERROR(SpecializationPole)
DTV_ERROR(CutoffBelowMinimum)
DTV_ERROR(SizeMismatch)
DTV_ERROR(TruncationTooSmall)
DTV_ERROR(NonFiniteCharacter)
DTV_ERROR(ZeroWeight)
DTV_ERROR(InfeasibleClass)
DTV_ERROR(MissingCappedDatum)
DTV_ERROR(ResidualImaginary)
DTV_ERROR(SingularRecursion)
DTV_ERROR(MissingExternalData)
DTV_ERROR(InconsistentSystem)
DTV_ERROR(RankDeficient)
DTV_ERROR(MissingSubTriple)
DTV_ERROR(ValidationError)

#undef DTV_ERROR

} // namespace dtv
