#pragma once

#include <stdexcept>

namespace parorbit {

#define PARORBIT_ERROR(Name)                          \
    struct Name : std::runtime_error {                \
        using std::runtime_error::runtime_error;      \
    }

PARORBIT_ERROR(NotNilpotent);
PARORBIT_ERROR(DimensionTooLarge);
PARORBIT_ERROR(NotInCone);
PARORBIT_ERROR(NotInjectiveArrows);
PARORBIT_ERROR(PresetMismatch);
PARORBIT_ERROR(FieldNotSupported);
PARORBIT_ERROR(RelationViolation);
PARORBIT_ERROR(IndexOutOfGrid);
PARORBIT_ERROR(NotDeltaFiltered);
PARORBIT_ERROR(MovePreconditionViolated);
PARORBIT_ERROR(MuTooLarge);
PARORBIT_ERROR(NotStable);
PARORBIT_ERROR(NotReducedBase);
PARORBIT_ERROR(BudgetExceeded);
PARORBIT_ERROR(InfiniteType);
PARORBIT_ERROR(ParamOutOfRange);
PARORBIT_ERROR(NotInParabolic);
PARORBIT_ERROR(MethodsDisagree);
PARORBIT_ERROR(InvalidDiagram);

#undef PARORBIT_ERROR

}  // namespace parorbit
