#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "omfam/expfam.hpp"
#include "omfam/fourier_motzkin.hpp"
#include "omfam/index_set.hpp"
#include "omfam/matrix.hpp"
#include "omfam/oriented_matroid.hpp"
#include "omfam/parallel.hpp"

namespace omfam {

/// c with cᵀa_y = 0 on the set and cᵀa_z >= 1 off it.
struct FacialCertificate {
  Vector c;
};

/// Circuit test: for every signed circuit (P, N), P ⊆ S ⇔ N ⊆ S. The empty
/// set is reported facial (the empty face).
bool is_facial(const OrientedMatroid& om, IndexSet s);
bool is_facial(const Matrix& a, IndexSet s);

/// Rows of the system B c <= z whose solutions are facial certificates for
/// S: a_yᵀ for y ∈ S, then -a_yᵀ for y ∈ S, then -a_zᵀ for z ∉ S, with
/// right-hand sides 0, 0, -1. Witnesses returned by facial_certificate are
/// indexed by these rows.
std::vector<LinearConstraint> facial_system(const Matrix& a, IndexSet s);

/// Decides facial-ness of S by exact Fourier–Motzkin elimination. Either
/// outcome is checked before it is returned. S may be empty (then a
/// certificate exists iff the columns are acyclic).
std::variant<FacialCertificate, FarkasWitness> facial_certificate(const Matrix& a, IndexSet s);

struct SupportSet {
  IndexSet states;
  std::size_t dimension = 0;  // affine dimension of the face
};

/// Every nonempty facial set, in canonical order (cardinality, then
/// lexicographic). Always contains the full state space.
struct SupportFamily {
  std::size_t ground_size = 0;
  std::vector<SupportSet> sets;

  bool contains(IndexSet s) const;
  std::vector<IndexSet> members() const;
};

/// Returns `a` with a constants row appended if (1, ..., 1) is not already
/// in its row span.
Matrix with_constants_row(const Matrix& a);

/// Facets are the complements of the supports of positive cocircuits; the
/// support sets are all their nonempty intersections plus the whole set.
SupportFamily enumerate_supports(const Matrix& a);

/// Reference scan of all 2^m - 1 nonempty subsets with the circuit test.
/// Throws std::length_error for m > 20.
SupportFamily brute_force_supports(const Matrix& a, Execution exec = Execution::Parallel);

inline constexpr std::size_t kBruteForceLimit = 20;

/// s_k for k = 1..m (entry k-1): the number of support sets of size k.
std::vector<std::uint64_t> s_vector(const SupportFamily& family);

/// Face counts by dimension. `counts[k]` is f_k for 0 <= k < dimension;
/// f_{-1} = 1 (empty face) and f_dimension = 1 (the polytope) are implied.
struct FVector {
  int dimension = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int k) const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SupportFamily& family);

/// Largest k such that every subset of at most k states is a support set.
std::size_t neighborliness(const SupportFamily& family);

struct UniformCheck {
  Distribution distribution;
  ClosureVerdict verdict;
};

/// Builds the normalized q·1_S (uniform on S for uniform q) and tests it
/// for closure membership.
UniformCheck uniform_on(IndexSet s, const ExponentialFamily& f);

}  // namespace omfam
