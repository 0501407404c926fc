#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "omfam/expfam.hpp"
#include "omfam/index_set.hpp"
#include "omfam/matrix.hpp"

namespace omfam {

/// [[1, 1, 1, 1], [-alpha, 1, 0, 0]]; alpha must not be 0 or 1.
Matrix example1_matrix(const Rational& alpha);

/// Binary model on {0,1}^n with all interactions except the top one. Rows
/// are the subsets T ⊊ {1..n} in bitmask order (∅ first, the constants
/// row); columns are states in lexicographic order with x_1 most
/// significant; entries ∏_{i∈T} x_i. Requires 2 <= n <= 6.
Matrix parity_model_matrix(std::size_t n);

/// (+1/-1 by even/odd number of ones), the generator of the parity model's kernel.
Vector parity_vector(std::size_t n);

/// Points t_1 < ... < t_n on the moment curve in dimension d.
struct CyclicPolytopeSpec {
  std::size_t d = 0;
  std::vector<Rational> t;

  /// t = (1, ..., n).
  static CyclicPolytopeSpec standard(std::size_t d, std::size_t n);
};

/// (d+1) × n: constants row over the columns (t_i, t_i², ..., t_i^d).
Matrix cyclic_matrix(const CyclicPolytopeSpec& spec);

/// Facets of C(d, n) by Gale's evenness condition, as sets of 0-based
/// vertex indices in lexicographic order.
std::vector<IndexSet> gale_evenness_facets(std::size_t d, std::size_t n);

/// f_0 .. f_{d-1} of C(d, n): C(d, n) is simplicial, so every nonempty
/// subset of a facet is a face.
std::vector<std::uint64_t> cyclic_f_vector(std::size_t d, std::size_t n);

/// C(2^n, k) - 2 C(2^{n-1}, k - 2^{n-1}) for 1 <= k < 2^n.
Integer parity_s_formula(std::size_t n, std::size_t k);

/// 3 × m matrix with columns (1, i, i²), i = 1..m; m >= 3.
Matrix moment_matrix(std::size_t m);

/// p(i) ∝ exp(-beta (i - j)²) over i = 1..m (float mode); j is 1-based.
Distribution delta_approximation(std::size_t m, std::size_t j, double beta);

}  // namespace omfam
