#include "omfam/oriented_matroid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "omfam/fourier_motzkin.hpp"
#include "omfam/linalg.hpp"

namespace omfam {

// ---------------------------------------------------------------------------
// Signed subsets

std::vector<int> SignedSubset::sign_vector(std::size_t m) const {
  std::vector<int> s(m, 0);
  for (auto i : plus.indices()) s.at(i) = 1;
  for (auto i : minus.indices()) s.at(i) = -1;
  return s;
}

SignedSubset SignedSubset::from_sign_vector(const std::vector<int>& signs) {
  SignedSubset x;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] > 0) x.plus.insert(i);
    if (signs[i] < 0) x.minus.insert(i);
  }
  return x;
}

bool canonical_less(const SignedSubset& a, const SignedSubset& b) {
  if (a.support() != b.support()) return canonical_less(a.support(), b.support());
  return canonical_less(a.plus, b.plus);
}

SignedSubset compose(const SignedSubset& x, const SignedSubset& y) {
  return {x.plus | (y.plus - x.minus), x.minus | (y.minus - x.plus)};
}

// ---------------------------------------------------------------------------
// Circuit vectors

CircuitVector::CircuitVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}

CircuitVector CircuitVector::primitive(const Vector& v) {
  Integer den = 1;
  for (const auto& e : v) den = lcm(den, e.denominator());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& e : v) {
    Integer x = e.numerator() * (den / e.denominator());
    g = gcd(g, x);
    ints.push_back(std::move(x));
  }
  if (g > 1)
    for (auto& x : ints) x /= g;
  return CircuitVector(std::move(ints));
}

IndexSet CircuitVector::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 0) s.insert(i);
  return s;
}

CircuitVector CircuitVector::canonical() const {
  for (const auto& e : entries_) {
    if (e > 0) return *this;
    if (e < 0) return negated();
  }
  return *this;
}

CircuitVector CircuitVector::negated() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(-e);
  return CircuitVector(std::move(out));
}

Vector CircuitVector::to_vector() const {
  Vector v(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) v[i] = Rational(entries_[i]);
  return v;
}

std::vector<Integer> CircuitVector::positive_part() const {
  std::vector<Integer> out;
  for (const auto& e : entries_) out.emplace_back(e > 0 ? e : Integer(0));
  return out;
}

std::vector<Integer> CircuitVector::negative_part() const {
  std::vector<Integer> out;
  for (const auto& e : entries_) out.emplace_back(e < 0 ? Integer(-e) : Integer(0));
  return out;
}

std::string CircuitVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

SignedSubset sign_of(const Vector& v) {
  SignedSubset x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() > 0) x.plus.insert(i);
    if (v[i].sign() < 0) x.minus.insert(i);
  }
  return x;
}

SignedSubset sign_of(const CircuitVector& c) {
  SignedSubset x;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) x.plus.insert(i);
    if (c[i] < 0) x.minus.insert(i);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Oriented matroids

OrientedMatroid OrientedMatroid::from_circuits(std::size_t ground_size, std::vector<SignedSubset> circuits) {
  std::sort(circuits.begin(), circuits.end(),
            [](const SignedSubset& a, const SignedSubset& b) { return canonical_less(a, b); });
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  return {ground_size, std::move(circuits)};
}

bool OrientedMatroid::contains(const SignedSubset& x) const {
  return std::binary_search(circuits.begin(), circuits.end(), x,
                            [](const SignedSubset& a, const SignedSubset& b) { return canonical_less(a, b); });
}

namespace {

std::string format_signed(const SignedSubset& x) {
  auto list = [](IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s.indices()) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  };
  return "(" + list(x.plus) + "," + list(x.minus) + ")";
}

void check_ground_size(const Matrix& a) {
  if (a.cols() > kMaxGroundSize) throw std::invalid_argument("ground set larger than 64 elements");
}

// Visits every k-subset of {0..m-1} in lexicographic order.
template <typename Visit>
void for_each_k_subset(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexSet s;
    for (auto i : idx) s.insert(i);
    if (!visit(s)) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool contains_any(IndexSet s, const std::vector<IndexSet>& supports) {
  return std::any_of(supports.begin(), supports.end(), [s](IndexSet c) { return c.subset_of(s); });
}

// Smallest dependent subset of `s` found by greedy deletion; its columns
// are a circuit.
IndexSet minimal_dependent_subset(const Matrix& a, IndexSet s) {
  for (auto i : s.indices()) {
    IndexSet t = s;
    t.erase(i);
    if (t.empty()) continue;
    if (rank(a.select_columns(t.indices())) < t.size()) s = t;
  }
  return s;
}

}  // namespace

std::string AxiomViolation::describe() const {
  std::string out;
  switch (axiom) {
    case Axiom::Symmetry: out = "C1: negation of " + format_signed(x) + " missing"; break;
    case Axiom::Incomparability:
      out = "C2: support of " + format_signed(x) + " inside support of " + format_signed(*y);
      break;
    case Axiom::WeakElimination:
      out = "C3: no elimination of element " + std::to_string(*element + 1) + " from " + format_signed(x) +
            " and " + format_signed(*y);
      break;
  }
  return out;
}

std::optional<CircuitVector> circuit_on_support(const Matrix& a, IndexSet s) {
  if (s.empty()) return std::nullopt;
  const auto cols = s.indices();
  const auto kernel = kernel_basis(a.select_columns(cols));
  if (kernel.size() != 1) return std::nullopt;
  Vector full(a.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (kernel[0][j].is_zero()) return std::nullopt;
    full[cols[j]] = kernel[0][j];
  }
  return CircuitVector::primitive(full).canonical();
}

std::vector<CircuitVector> enumerate_circuits(const Matrix& a, Execution exec) {
  check_ground_size(a);
  const std::size_t m = a.cols();
  const std::size_t max_size = std::min(rank(a) + 1, m);
  constexpr std::size_t kChunk = 1 << 14;
  const int threads = exec == Execution::Parallel ? thread_count() : 1;

  std::vector<CircuitVector> found;
  std::vector<IndexSet> found_supports;
  std::vector<IndexSet> batch;
  batch.reserve(kChunk);

  // Same-size supports cannot contain each other, so one level is tested
  // against circuits from strictly smaller levels only.
  auto flush = [&](std::vector<IndexSet>& level_supports, std::vector<CircuitVector>& level_found) {
    std::vector<std::optional<CircuitVector>> slot(batch.size());
    const auto n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (threads > 1)
    for (long i = 0; i < n; ++i) slot[static_cast<std::size_t>(i)] = circuit_on_support(a, batch[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!slot[i]) continue;
      level_supports.push_back(batch[i]);
      level_found.push_back(std::move(*slot[i]));
    }
    batch.clear();
  };

  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<IndexSet> level_supports;
    std::vector<CircuitVector> level_found;
    for_each_k_subset(m, k, [&](IndexSet s) {
      if (!contains_any(s, found_supports)) batch.push_back(s);
      if (batch.size() == kChunk) flush(level_supports, level_found);
      return true;
    });
    flush(level_supports, level_found);
    found_supports.insert(found_supports.end(), level_supports.begin(), level_supports.end());
    for (auto& c : level_found) found.push_back(std::move(c));
  }

  std::sort(found.begin(), found.end(), [](const CircuitVector& x, const CircuitVector& y) {
    return canonical_less(x.support(), y.support());
  });
  return found;
}

Integer circuit_count_bound(const Matrix& a) { return binomial(a.cols(), static_cast<long>(rank(a)) + 1); }

OrientedMatroid signed_circuits(const Matrix& a, Execution exec) {
  std::vector<SignedSubset> signed_sets;
  for (const auto& c : enumerate_circuits(a, exec)) {
    const SignedSubset x = sign_of(c);
    signed_sets.push_back(x);
    signed_sets.push_back(-x);
  }
  return OrientedMatroid::from_circuits(a.cols(), std::move(signed_sets));
}

AxiomReport axioms_check(const OrientedMatroid& om, Execution exec) {
  const auto& cs = om.circuits;
  const auto n = static_cast<long>(cs.size());
  const int threads = exec == Execution::Parallel ? thread_count() : 1;
  std::vector<std::vector<AxiomViolation>> per_x(cs.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (long i = 0; i < n; ++i) {
    const SignedSubset& x = cs[static_cast<std::size_t>(i)];
    auto& out = per_x[static_cast<std::size_t>(i)];
    if (!om.contains(-x)) out.push_back({Axiom::Symmetry, x, std::nullopt, std::nullopt});
    for (const SignedSubset& y : cs) {
      if (x == y) continue;
      if (x.support().subset_of(y.support()) && x != -y)
        out.push_back({Axiom::Incomparability, x, y, std::nullopt});
      if (x == -y) continue;
      for (auto e : (x.plus & y.minus).indices()) {
        IndexSet drop;
        drop.insert(e);
        const IndexSet allowed_plus = (x.plus | y.plus) - drop;
        const IndexSet allowed_minus = (x.minus | y.minus) - drop;
        const bool eliminated = std::any_of(cs.begin(), cs.end(), [&](const SignedSubset& z) {
          return z.plus.subset_of(allowed_plus) && z.minus.subset_of(allowed_minus);
        });
        if (!eliminated) out.push_back({Axiom::WeakElimination, x, y, e});
      }
    }
  }

  AxiomReport report;
  for (auto& v : per_x) report.violations.insert(report.violations.end(), v.begin(), v.end());
  return report;
}

CircuitVector sign_consistent_circuit(const Matrix& a, const Vector& n) {
  if (n.size() != a.cols()) throw std::invalid_argument("vector length does not match matrix width");
  if (n.is_zero()) throw std::invalid_argument("zero vector has no circuit");
  if (!(a * n).is_zero()) throw std::invalid_argument("vector is not in the kernel");

  Vector c = n;
  while (true) {
    const IndexSet s = sign_of(c).support();
    const IndexSet inner = minimal_dependent_subset(a, s);
    if (inner == s) break;
    // c' is a circuit strictly inside supp(c); move along c' until some
    // coordinate of c reaches zero without any coordinate changing sign.
    Vector cp = circuit_on_support(a, inner)->to_vector();
    std::optional<Rational> step;
    for (auto i : inner.indices()) {
      const Rational ratio = c[i] / cp[i];
      if (ratio.sign() > 0 && (!step || ratio < *step)) step = ratio;
    }
    if (!step) {
      cp *= Rational(-1);
      for (auto i : inner.indices()) {
        const Rational ratio = c[i] / cp[i];
        if (ratio.sign() > 0 && (!step || ratio < *step)) step = ratio;
      }
    }
    c -= *step * cp;
  }
  return CircuitVector::primitive(c);
}

std::vector<ConformalTerm> conformal_decomposition(const Matrix& a, const Vector& n) {
  if (n.size() != a.cols()) throw std::invalid_argument("vector length does not match matrix width");
  if (!(a * n).is_zero()) throw std::invalid_argument("vector is not in the kernel");
  std::vector<ConformalTerm> terms;
  Vector rest = n;
  while (!rest.is_zero()) {
    CircuitVector c = sign_consistent_circuit(a, rest);
    std::optional<Rational> coeff;
    for (auto i : c.support().indices()) {
      const Rational ratio = rest[i] / Rational(c[i]);
      if (!coeff || ratio < *coeff) coeff = ratio;
    }
    rest -= *coeff * c.to_vector();
    terms.push_back({*coeff, std::move(c)});
  }
  return terms;
}

OrientedMatroid cocircuits(const Matrix& a) {
  check_ground_size(a);
  const std::size_t m = a.cols();
  const std::size_t rk = rank(a);
  std::vector<SignedSubset> found;
  if (rk == 0) return OrientedMatroid::from_circuits(m, {});

  std::vector<IndexSet> seen_zero_sets;
  for_each_k_subset(m, rk - 1, [&](IndexSet z) {
    const auto zcols = z.indices();
    const Matrix az = a.select_columns(zcols);
    if (rank(az) != rk - 1) return true;
    // Functionals vanishing on the chosen columns; exactly one direction of
    // them is nonzero on the row span.
    for (const Vector& y : kernel_basis(az.transposed())) {
      const Vector values = a.transposed() * y;
      if (values.is_zero()) continue;
      const SignedSubset x = sign_of(values);
      const IndexSet zero_set = IndexSet::full(m) - x.support();
      if (std::find(seen_zero_sets.begin(), seen_zero_sets.end(), zero_set) == seen_zero_sets.end()) {
        seen_zero_sets.push_back(zero_set);
        found.push_back(x);
        found.push_back(-x);
      }
      break;
    }
    return true;
  });
  return OrientedMatroid::from_circuits(m, std::move(found));
}

bool is_acyclic(const Matrix& a) {
  std::vector<LinearConstraint> system;
  for (std::size_t x = 0; x < a.cols(); ++x) {
    // -cᵀa_x <= -1
    system.push_back({Rational(-1) * a.column(x), Relation::LessEqual, Rational(-1)});
  }
  return std::holds_alternative<Vector>(fourier_motzkin(system, a.rows()));
}

}  // namespace omfam
