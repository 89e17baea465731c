#pragma once
#include <stdexcept>
#include <string>

namespace tanlift {

// Scalar function evaluated below its domain floor.
struct EvalDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Base point outside the model's chart (e.g. polar angle inside the pole guard).
struct ChartDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Lifted metric fails one of its positivity inequalities at the evaluated t.
struct DegenerateMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form denominator or a matrix to invert is numerically singular.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decomposition basis degenerates (y = 0).
struct DegenerateBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input tensor is not in the span of the decomposition basis.
struct NotInSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decomposition Gram matrix is rank deficient.
struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a higher base dimension.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two vectors fail to span a non-degenerate 2-plane.
struct PlaneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tanlift
