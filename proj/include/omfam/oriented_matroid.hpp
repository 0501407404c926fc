#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omfam/index_set.hpp"
#include "omfam/matrix.hpp"
#include "omfam/parallel.hpp"
#include "omfam/rational.hpp"

namespace omfam {

/// A pair (X⁺, X⁻) of disjoint subsets of the ground set; equivalently a
/// sign vector in {-1, 0, +1}^m.
struct SignedSubset {
  IndexSet plus;
  IndexSet minus;

  IndexSet support() const { return plus | minus; }
  bool empty() const { return plus.empty() && minus.empty(); }
  SignedSubset operator-() const { return {minus, plus}; }
  /// No element carries opposite signs in the two sets.
  bool sign_consistent_with(const SignedSubset& o) const {
    return !plus.intersects(o.minus) && !minus.intersects(o.plus);
  }
  std::vector<int> sign_vector(std::size_t m) const;
  static SignedSubset from_sign_vector(const std::vector<int>& signs);

  friend bool operator==(const SignedSubset&, const SignedSubset&) = default;
};

/// Orders by support (canonical set order), then by the positive part.
bool canonical_less(const SignedSubset& a, const SignedSubset& b);

/// (X∘Y)⁺ = X⁺ ∪ (Y⁺ \ X⁻), (X∘Y)⁻ = X⁻ ∪ (Y⁻ \ X⁺).
SignedSubset compose(const SignedSubset& x, const SignedSubset& y);

/// Integer kernel vector with inclusion-minimal support. Entries are
/// coprime. `canonical()` additionally makes the first nonzero entry
/// positive; vectors oriented to match some other vector need not be.
class CircuitVector {
 public:
  CircuitVector() = default;
  explicit CircuitVector(std::vector<Integer> entries);

  /// Clears denominators and divides out the gcd, keeping signs.
  static CircuitVector primitive(const Vector& v);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  IndexSet support() const;
  CircuitVector canonical() const;
  CircuitVector negated() const;
  Vector to_vector() const;
  /// c⁺ and c⁻ as nonnegative exponent vectors.
  std::vector<Integer> positive_part() const;
  std::vector<Integer> negative_part() const;
  std::string to_string() const;

  friend bool operator==(const CircuitVector&, const CircuitVector&) = default;

 private:
  std::vector<Integer> entries_;
};

SignedSubset sign_of(const Vector& v);
SignedSubset sign_of(const CircuitVector& c);

/// A ground set with a family of signed circuits, kept sorted and free of
/// duplicates.
struct OrientedMatroid {
  std::size_t ground_size = 0;
  std::vector<SignedSubset> circuits;

  static OrientedMatroid from_circuits(std::size_t ground_size, std::vector<SignedSubset> circuits);
  bool contains(const SignedSubset& x) const;
  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;
};

enum class Axiom { Symmetry, Incomparability, WeakElimination };

struct AxiomViolation {
  Axiom axiom;
  SignedSubset x;
  std::optional<SignedSubset> y;
  std::optional<std::size_t> element;
  std::string describe() const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// One canonical circuit vector per circuit of `a`, sorted by support.
/// Candidate supports are scanned by increasing size up to rank + 1,
/// skipping supersets of circuits already found.
std::vector<CircuitVector> enumerate_circuits(const Matrix& a, Execution exec = Execution::Parallel);

/// True if the columns in `s` are a circuit: nullity one, and the kernel
/// vector is nonzero on every column of `s`.
std::optional<CircuitVector> circuit_on_support(const Matrix& a, IndexSet s);

/// Upper bound C(m, rank + 1) on the number of circuits.
Integer circuit_count_bound(const Matrix& a);

/// ± sgn of every circuit vector.
OrientedMatroid signed_circuits(const Matrix& a, Execution exec = Execution::Parallel);

/// Checks (C1) symmetry, (C2) incomparability and (C3) weak elimination by
/// exhaustive search; reports every violation found.
AxiomReport axioms_check(const OrientedMatroid& om, Execution exec = Execution::Parallel);

/// A circuit vector c with supp(c) ⊆ supp(n), oriented so that its signs
/// agree with n wherever c is nonzero. Throws std::invalid_argument if n is
/// zero or not in ker A.
CircuitVector sign_consistent_circuit(const Matrix& a, const Vector& n);

struct ConformalTerm {
  Rational coefficient;
  CircuitVector circuit;
};

/// Writes n ∈ ker A as a positive combination of circuit vectors that are
/// each sign-consistent with n. Empty for n = 0.
std::vector<ConformalTerm> conformal_decomposition(const Matrix& a, const Vector& n);

/// Signed cocircuits: minimal-support sign vectors of the row span of `a`,
/// found from the hyperplanes spanned by columns.
OrientedMatroid cocircuits(const Matrix& a);

/// True if some vector in the row span is strictly positive on every column.
bool is_acyclic(const Matrix& a);

}  // namespace omfam
