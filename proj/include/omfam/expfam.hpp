#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "omfam/index_set.hpp"
#include "omfam/matrix.hpp"
#include "omfam/oriented_matroid.hpp"
#include "omfam/parallel.hpp"

namespace omfam {

enum class Mode { Exact, Float };

/// Default relative tolerance for float-mode equation residuals.
inline constexpr double kDefaultTolerance = 1e-9;

/// A probability vector over the state space, held either as exact
/// rationals or as doubles (float mode).
class Distribution {
 public:
  /// Throws std::invalid_argument on negative entries or a sum other than 1.
  static Distribution exact(std::vector<Rational> p);
  /// Throws std::invalid_argument on negative or non-finite entries, or a
  /// sum further than `tol` from 1.
  static Distribution approximate(std::vector<double> p, double tol = kDefaultTolerance);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }
  std::size_t size() const { return approx_.size(); }
  const std::vector<Rational>& exact_values() const;
  const std::vector<double>& values() const { return approx_; }
  IndexSet support() const;

 private:
  Mode mode_ = Mode::Exact;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

/// p ∈ closure iff p^{c⁺} q^{c⁻} = p^{c⁻} q^{c⁺} for every circuit c.
struct ImplicitEquation {
  CircuitVector circuit;
  std::vector<Integer> lhs_exponents;  // c⁺
  std::vector<Integer> rhs_exponents;  // c⁻
};

/// Sufficient statistics A (d × m) and a positive reference measure q. If
/// (1, ..., 1) is not in the row span of A a constants row is appended and
/// `augmented()` reports it. The circuits of A are computed once, here.
class ExponentialFamily {
 public:
  ExponentialFamily(Matrix a, Vector q);
  static ExponentialFamily uniform(Matrix a);

  const Matrix& matrix() const { return a_; }
  const Vector& reference() const { return q_; }
  bool augmented() const { return augmented_; }
  std::size_t states() const { return a_.cols(); }
  /// Dimension of the family: rank(A) - 1.
  std::size_t dimension() const { return rank_ - 1; }
  const std::vector<ImplicitEquation>& equations() const { return equations_; }

 private:
  Matrix a_;
  Vector q_;
  bool augmented_ = false;
  std::size_t rank_ = 0;
  std::vector<ImplicitEquation> equations_;
};

std::vector<ImplicitEquation> implicit_equations(const ExponentialFamily& f);

/// p(x) ∝ q(x) ∏_j t_j^{A[j,x]}, the monomial form of p_θ with θ_j = log t_j.
/// Exact; requires an integer A and positive t. When the family was
/// augmented, t may omit the entry for the added constants row.
Distribution parametrize(const ExponentialFamily& f, const Vector& t);

/// p_θ(x) ∝ q(x) exp(θᵀa_x) in floating point, for any rational A.
Distribution parametrize_theta(const ExponentialFamily& f, std::span<const double> theta);

struct EquationResidual {
  CircuitVector circuit;
  /// Exact side values p^{c⁺}q^{c⁻} and p^{c⁻}q^{c⁺}; set in exact mode only.
  Rational lhs;
  Rational rhs;
  /// Side values as doubles (both modes; may underflow for huge exponents).
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  /// |lhs - rhs| / max(lhs, rhs); zero when both sides vanish.
  double relative_residual = 0.0;
};

struct ClosureVerdict {
  bool member = false;
  std::vector<EquationResidual> violated;
};

/// Tests every implicit equation: exactly for exact distributions, within
/// relative tolerance `tol` (compared in log space) for float ones.
ClosureVerdict in_closure(const ExponentialFamily& f, const Distribution& p, double tol = kDefaultTolerance,
                          Execution exec = Execution::Parallel);

/// Full-support membership: log(p/q) is orthogonal to a kernel basis. Exact
/// for exact distributions (compared as products of rational powers); in
/// float mode the inner products must vanish to within `tol` relative to
/// their term magnitudes. Throws std::invalid_argument without full support.
bool in_family_full_support(const ExponentialFamily& f, const Distribution& p, double tol = kDefaultTolerance);

/// Member p_{(μ)} of the family approaching a boundary target supported on a
/// facial set S as μ → -∞. Uses a facial certificate c and a solution d of
/// dᵀa_x = log(p(x)/q(x)) on S. Throws std::invalid_argument if S is not
/// facial or is not the target's support, and std::domain_error if the
/// log-linear system is inconsistent beyond `tol`.
Distribution boundary_sequence(const ExponentialFamily& f, IndexSet s, const Distribution& target, double mu,
                               double tol = 1e-9);

/// A·p. Float distributions are converted exactly from their doubles.
Vector moment_map(const ExponentialFamily& f, const Distribution& p);

/// ℓ1 distance between two distributions of equal length.
double l1_distance(const Distribution& a, const Distribution& b);

}  // namespace omfam
