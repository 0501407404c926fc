#include "omfam/supports.hpp"

#include <algorithm>
#include <stdexcept>

#include "omfam/linalg.hpp"

namespace omfam {

bool is_facial(const OrientedMatroid& om, IndexSet s) {
  if (s.empty()) return true;
  return std::all_of(om.circuits.begin(), om.circuits.end(),
                     [s](const SignedSubset& x) { return x.plus.subset_of(s) == x.minus.subset_of(s); });
}

bool is_facial(const Matrix& a, IndexSet s) { return is_facial(signed_circuits(a), s); }

std::vector<LinearConstraint> facial_system(const Matrix& a, IndexSet s) {
  std::vector<LinearConstraint> rows;
  const auto inside = s.indices();
  for (auto y : inside) rows.push_back({a.column(y), Relation::LessEqual, Rational(0)});
  for (auto y : inside) rows.push_back({Rational(-1) * a.column(y), Relation::LessEqual, Rational(0)});
  for (std::size_t z = 0; z < a.cols(); ++z)
    if (!s.contains(z)) rows.push_back({Rational(-1) * a.column(z), Relation::LessEqual, Rational(-1)});
  return rows;
}

std::variant<FacialCertificate, FarkasWitness> facial_certificate(const Matrix& a, IndexSet s) {
  // Solved with explicit equalities; the witness is then spread over the
  // doubled rows of the pure-inequality form.
  std::vector<LinearConstraint> system;
  const auto inside = s.indices();
  for (auto y : inside) system.push_back({a.column(y), Relation::Equal, Rational(0)});
  for (std::size_t z = 0; z < a.cols(); ++z)
    if (!s.contains(z)) system.push_back({Rational(-1) * a.column(z), Relation::LessEqual, Rational(-1)});

  auto result = fourier_motzkin(system, a.rows());
  const auto b_form = facial_system(a, s);
  if (auto* c = std::get_if<Vector>(&result)) {
    if (!satisfies(b_form, *c)) throw std::logic_error("facial certificate failed verification");
    return FacialCertificate{*c};
  }
  const Vector& y = std::get<FarkasWitness>(result).multipliers;
  const std::size_t k = inside.size();
  Vector spread(b_form.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i].sign() > 0) spread[i] = y[i];
    else spread[k + i] = -y[i];
  }
  for (std::size_t i = k; i < y.size(); ++i) spread[k + i] = y[i];
  FarkasWitness w{spread};
  if (!is_valid_witness(b_form, a.rows(), w)) throw std::logic_error("Farkas witness failed verification");
  return w;
}

bool SupportFamily::contains(IndexSet s) const {
  return std::any_of(sets.begin(), sets.end(), [s](const SupportSet& x) { return x.states == s; });
}

std::vector<IndexSet> SupportFamily::members() const {
  std::vector<IndexSet> out;
  out.reserve(sets.size());
  for (const auto& x : sets) out.push_back(x.states);
  return out;
}

Matrix with_constants_row(const Matrix& a) {
  Vector ones(a.cols());
  for (auto& v : ones) v = 1;
  if (in_row_span(a, ones)) return a;
  return a.with_row_appended(ones);
}

namespace {

SupportFamily finish_family(const Matrix& a, std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](IndexSet x, IndexSet y) { return canonical_less(x, y); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  SupportFamily family{a.cols(), {}};
  for (auto s : sets) {
    const std::size_t r = rank(a.select_columns(s.indices()));
    family.sets.push_back({s, r - 1});
  }
  return family;
}

}  // namespace

SupportFamily enumerate_supports(const Matrix& a_in) {
  const Matrix a = with_constants_row(a_in);
  const std::size_t m = a.cols();
  const IndexSet all = IndexSet::full(m);

  std::vector<IndexSet> facets;
  for (const auto& x : cocircuits(a).circuits)
    if (x.minus.empty() && !x.plus.empty()) facets.push_back(all - x.plus);

  std::vector<IndexSet> faces{all};
  for (IndexSet facet : facets) {
    const std::size_t n = faces.size();
    for (std::size_t i = 0; i < n; ++i) {
      const IndexSet g = faces[i] & facet;
      if (std::find(faces.begin(), faces.end(), g) == faces.end()) faces.push_back(g);
    }
  }
  std::erase_if(faces, [](IndexSet s) { return s.empty(); });
  return finish_family(a, std::move(faces));
}

SupportFamily brute_force_supports(const Matrix& a_in, Execution exec) {
  const Matrix a = with_constants_row(a_in);
  const std::size_t m = a.cols();
  if (m > kBruteForceLimit) throw std::length_error("brute-force scan limited to 20 states");
  const OrientedMatroid om = signed_circuits(a, exec);
  const auto total = static_cast<long>((std::uint64_t{1} << m) - 1);
  std::vector<char> facial(static_cast<std::size_t>(total), 0);
  const int threads = exec == Execution::Parallel ? thread_count() : 1;

#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
  for (long i = 0; i < total; ++i) {
    facial[static_cast<std::size_t>(i)] = is_facial(om, IndexSet(static_cast<std::uint64_t>(i + 1))) ? 1 : 0;
  }

  std::vector<IndexSet> sets;
  for (long i = 0; i < total; ++i)
    if (facial[static_cast<std::size_t>(i)]) sets.emplace_back(static_cast<std::uint64_t>(i + 1));
  return finish_family(a, std::move(sets));
}

std::vector<std::uint64_t> s_vector(const SupportFamily& family) {
  std::vector<std::uint64_t> s(family.ground_size, 0);
  for (const auto& x : family.sets) ++s[x.states.size() - 1];
  return s;
}

std::uint64_t FVector::at(int k) const {
  if (k == -1 || k == dimension) return 1;
  if (k < -1 || k > dimension) return 0;
  return counts[static_cast<std::size_t>(k)];
}

FVector f_vector(const SupportFamily& family) {
  FVector f;
  for (const auto& x : family.sets) f.dimension = std::max(f.dimension, static_cast<int>(x.dimension));
  f.counts.assign(static_cast<std::size_t>(f.dimension), 0);
  for (const auto& x : family.sets)
    if (static_cast<int>(x.dimension) < f.dimension) ++f.counts[x.dimension];
  return f;
}

std::size_t neighborliness(const SupportFamily& family) {
  const auto s = s_vector(family);
  std::size_t k = 0;
  while (k < s.size() && binomial(family.ground_size, static_cast<long>(k) + 1) == s[k]) ++k;
  return k;
}

UniformCheck uniform_on(IndexSet s, const ExponentialFamily& f) {
  if (s.empty()) throw std::invalid_argument("support set must be nonempty");
  std::vector<Rational> p(f.states());
  Rational z;
  for (auto x : s.indices()) {
    if (x >= f.states()) throw std::out_of_range("state index out of range");
    p[x] = f.reference()[x];
    z += p[x];
  }
  for (auto& v : p) v /= z;
  Distribution d = Distribution::exact(std::move(p));
  ClosureVerdict verdict = in_closure(f, d);
  return {std::move(d), std::move(verdict)};
}

}  // namespace omfam
