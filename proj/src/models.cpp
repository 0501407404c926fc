#include "omfam/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace omfam {

Matrix example1_matrix(const Rational& alpha) {
  if (alpha == Rational(0) || alpha == Rational(1)) throw std::invalid_argument("alpha must not be 0 or 1");
  return Matrix{{1, 1, 1, 1}, {-alpha, 1, 0, 0}};
}

Matrix parity_model_matrix(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("parity model needs 2 <= n <= 6");
  const std::size_t states = std::size_t{1} << n;
  const std::size_t subsets = states - 1;  // all T except {1..n}
  Matrix a(subsets, states);
  for (std::size_t t = 0; t < subsets; ++t) {
    for (std::size_t x = 0; x < states; ++x) {
      // Variable i (1-based) is bit n-i of the state index.
      bool all_one = true;
      for (std::size_t i = 0; i < n; ++i)
        if (((t >> i) & 1U) && !((x >> (n - 1 - i)) & 1U)) all_one = false;
      a(t, x) = all_one ? 1 : 0;
    }
  }
  return a;
}

Vector parity_vector(std::size_t n) {
  const std::size_t states = std::size_t{1} << n;
  Vector v(states);
  for (std::size_t x = 0; x < states; ++x) v[x] = (std::popcount(x) % 2 == 0) ? 1 : -1;
  return v;
}

CyclicPolytopeSpec CyclicPolytopeSpec::standard(std::size_t d, std::size_t n) {
  CyclicPolytopeSpec spec{d, {}};
  for (std::size_t i = 1; i <= n; ++i) spec.t.emplace_back(static_cast<long>(i));
  return spec;
}

Matrix cyclic_matrix(const CyclicPolytopeSpec& spec) {
  const std::size_t n = spec.t.size();
  if (spec.d < 1) throw std::invalid_argument("cyclic polytope dimension must be positive");
  if (n <= spec.d) throw std::invalid_argument("cyclic polytope needs n > d points");
  for (std::size_t i = 1; i < n; ++i)
    if (!(spec.t[i - 1] < spec.t[i])) throw std::invalid_argument("moment-curve parameters must increase strictly");
  Matrix a(spec.d + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational power = 1;
    for (std::size_t r = 0; r <= spec.d; ++r) {
      a(r, i) = power;
      power *= spec.t[i];
    }
  }
  return a;
}

std::vector<IndexSet> gale_evenness_facets(std::size_t d, std::size_t n) {
  if (d < 1 || n <= d) throw std::invalid_argument("need n > d >= 1");
  if (n > kMaxGroundSize) throw std::invalid_argument("too many vertices");
  std::vector<IndexSet> facets;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    const IndexSet s = IndexSet::from_indices(idx);
    bool even = true;
    for (std::size_t i = 0; i < n && even; ++i) {
      if (s.contains(i)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.contains(j)) continue;
        std::size_t between = 0;
        for (std::size_t k = i + 1; k < j; ++k) between += s.contains(k) ? 1 : 0;
        if (between % 2 != 0) {
          even = false;
          break;
        }
      }
    }
    if (even) facets.push_back(s);

    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == n - d + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return facets;
}

std::vector<std::uint64_t> cyclic_f_vector(std::size_t d, std::size_t n) {
  std::set<std::uint64_t> faces;
  for (IndexSet facet : gale_evenness_facets(d, n)) {
    // Every nonempty subset of the facet's bitmask.
    const std::uint64_t bits = facet.bits();
    for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) faces.insert(sub);
  }
  std::vector<std::uint64_t> f(d, 0);
  for (auto s : faces) ++f[static_cast<std::size_t>(std::popcount(s)) - 1];
  return f;
}

Integer parity_s_formula(std::size_t n, std::size_t k) {
  const std::size_t states = std::size_t{1} << n;
  if (k < 1 || k >= states) throw std::invalid_argument("formula holds for 1 <= k < 2^n");
  const long half = static_cast<long>(states / 2);
  return binomial(states, static_cast<long>(k)) - 2 * binomial(states / 2, static_cast<long>(k) - half);
}

Matrix moment_matrix(std::size_t m) {
  if (m < 3) throw std::invalid_argument("moment matrix needs m >= 3");
  return cyclic_matrix(CyclicPolytopeSpec::standard(2, m));
}

Distribution delta_approximation(std::size_t m, std::size_t j, double beta) {
  if (j < 1 || j > m) throw std::invalid_argument("state index out of range");
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  std::vector<double> logw(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const double diff = static_cast<double>(i) - static_cast<double>(j);
    logw[i - 1] = -beta * diff * diff;
  }
  const double mx = *std::max_element(logw.begin(), logw.end());
  double z = 0.0;
  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) z += p[i] = std::exp(logw[i] - mx);
  for (auto& v : p) v /= z;
  return Distribution::approximate(std::move(p), 1e-9);
}

}  // namespace omfam
