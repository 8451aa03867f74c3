#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nestocone/rational.hpp"

namespace nestocone {

using RowVector = std::vector<Rational>;
/// Dense row-major rational matrix.
using Matrix = std::vector<RowVector>;

/// A x = rhs.
struct LinearSystem {
    Matrix a;
    RowVector rhs;
    std::size_t cols = 0;
};

std::size_t rank(const Matrix& a, std::size_t cols);

/// Basis of {x : A x = 0}, one vector per free column of the reduced row echelon form.
std::vector<RowVector> nullspace(const Matrix& a, std::size_t cols);

/// Some solution (free variables set to zero), or nothing when inconsistent.
std::optional<RowVector> solve(const LinearSystem& sys);

/// Some x ≥ 0 with A x = rhs, found by a phase-one simplex with Bland's rule.
std::optional<RowVector> find_nonnegative_solution(const LinearSystem& sys);

}  // namespace nestocone
