#pragma once

#include <stdexcept>
#include <string>

namespace ortheta {

struct OrthetaError : std::runtime_error {
    explicit OrthetaError(const std::string& m) : std::runtime_error(m) {}
};

#define ORTHETA_ERROR(NAME)                                              \
    struct NAME : OrthetaError {                                         \
        explicit NAME(const std::string& m = #NAME) : OrthetaError(m) {} \
    }

ORTHETA_ERROR(NotSymmetric);
ORTHETA_ERROR(OddDiagonal);
ORTHETA_ERROR(Degenerate);
ORTHETA_ERROR(NoneFound);
ORTHETA_ERROR(NotIsotropic);
ORTHETA_ERROR(NotPrimitive);
ORTHETA_ERROR(NotInLattice);
ORTHETA_ERROR(NotInMPrime);
ORTHETA_ERROR(BudgetExceeded);
ORTHETA_ERROR(InvalidTower);
ORTHETA_ERROR(BadSymbol);
ORTHETA_ERROR(SupportViolation);
ORTHETA_ERROR(WeightMismatch);
ORTHETA_ERROR(ParseError);
ORTHETA_ERROR(NontrivialDiscriminant);
ORTHETA_ERROR(NotEven);
ORTHETA_ERROR(HorizonExceeded);
ORTHETA_ERROR(DomainError);
ORTHETA_ERROR(PoleAtC);
ORTHETA_ERROR(DivergentRegion);
ORTHETA_ERROR(OutsideDomain);
ORTHETA_ERROR(DimensionTooLarge);
ORTHETA_ERROR(NotInOrthogonalGroup);
ORTHETA_ERROR(BadPolynomialGrading);
ORTHETA_ERROR(TruncationInsufficient);
ORTHETA_ERROR(DegenerateLambda);
ORTHETA_ERROR(StrategyUnavailable);
ORTHETA_ERROR(ConvergenceViolated);
ORTHETA_ERROR(BadSignature);
ORTHETA_ERROR(NotOrthogonal);
ORTHETA_ERROR(BadResolution);
ORTHETA_ERROR(NotHarmonic);

#undef ORTHETA_ERROR

} // namespace ortheta
