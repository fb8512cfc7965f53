#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

struct DivideByZeroError : std::domain_error {
    explicit DivideByZeroError(const std::string& what) : std::domain_error(what) {}
};

struct FieldMismatchError : std::invalid_argument {
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation needs r < char(K) and the field is too small.
struct CharacteristicError : std::domain_error {
    explicit CharacteristicError(const std::string& what) : std::domain_error(what) {}
};

struct WorkLimitError : std::runtime_error {
    explicit WorkLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ReducibleCurveError : std::invalid_argument {
    explicit ReducibleCurveError(const std::string& what) : std::invalid_argument(what) {}
};

struct IdenticalCurvesError : std::invalid_argument {
    explicit IdenticalCurvesError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace curvelab
