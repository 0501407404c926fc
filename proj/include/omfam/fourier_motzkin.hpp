#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "omfam/matrix.hpp"

namespace omfam {

enum class Relation { LessEqual, Equal };

/// coefficientsᵀ x (<= | =) rhs
struct LinearConstraint {
  Vector coefficients;
  Relation relation;
  Rational rhs;
};

/// Proof that a system B x (<=,=) z has no solution: multipliers y, one per
/// constraint, nonnegative on inequality rows, with yᵀB = 0 and yᵀz < 0.
struct FarkasWitness {
  Vector multipliers;
};

/// Exact Fourier–Motzkin feasibility test. Variables are eliminated in
/// index order; an equality with a nonzero coefficient on the current
/// variable is used for substitution, otherwise inequalities are paired.
/// Rows that are positive multiples of one another are merged, keeping the
/// tighter bound.
/// Returns a solution (back-substituted, preferring values near zero) or a
/// Farkas witness.
std::variant<Vector, FarkasWitness> fourier_motzkin(const std::vector<LinearConstraint>& system,
                                                    std::size_t num_vars);

bool satisfies(const std::vector<LinearConstraint>& system, const Vector& x);
bool is_valid_witness(const std::vector<LinearConstraint>& system, std::size_t num_vars, const FarkasWitness& w);

}  // namespace omfam
