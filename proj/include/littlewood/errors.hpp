#pragma once

#include <stdexcept>
#include <string>

namespace littlewood {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad inputs / violated preconditions (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

struct ComponentOutsideUniverse : InputError { using InputError::InputError; };
struct UniverseMismatch : InputError { using InputError::InputError; };
struct DomainMismatch : InputError { using InputError::InputError; };
struct UndefinedInfinityArithmetic : InputError { using InputError::InputError; };
struct PointOutsideDomain : InputError { using InputError::InputError; };
struct NegativeFunction : InputError { using InputError::InputError; };
struct MonotonicityViolation : InputError { using InputError::InputError; };
struct NotSimple : InputError { using InputError::InputError; };
struct NotFiniteAE : InputError { using InputError::InputError; };
struct NotExactMode : InputError { using InputError::InputError; };
struct NonMonotoneSequence : InputError { using InputError::InputError; };
struct NotContinuousKind : InputError { using InputError::InputError; };
struct BudgetViolated : InputError { using InputError::InputError; };
struct WitnessMissing : InputError { using InputError::InputError; };
struct InputMismatch : InputError { using InputError::InputError; };
struct ParseError : InputError { using InputError::InputError; };

// A bounded search ran past its cap (CLI exit code 3).
struct IterationCapExceeded : Error {
    using Error::Error;
};

// brute_force_min_index found nothing below n_max.
struct NotFound : Error {
    using Error::Error;
};

}  // namespace littlewood
