#include "omfam/expfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "omfam/linalg.hpp"
#include "omfam/supports.hpp"

namespace omfam {

namespace {

long small_exponent(const Integer& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("exponent too large");
  return e.get_si();
}

// Exact p^{a} q^{b} for nonnegative integer exponent vectors.
Rational monomial(const std::vector<Rational>& p, const std::vector<Integer>& a, const Vector& q,
                  const std::vector<Integer>& b) {
  Rational r = 1;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (a[x] != 0) r *= p[x].pow(small_exponent(a[x]));
    if (b[x] != 0) r *= q[x].pow(small_exponent(b[x]));
    if (r.is_zero()) return r;
  }
  return r;
}

// log(p^{a} q^{b}); -inf when a zero probability carries a positive exponent.
double log_monomial(const std::vector<double>& p, const std::vector<Integer>& a, const std::vector<double>& log_q,
                    const std::vector<Integer>& b) {
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (a[x] != 0) {
      if (p[x] == 0.0) return -std::numeric_limits<double>::infinity();
      s += a[x].get_d() * std::log(p[x]);
    }
    if (b[x] != 0) s += b[x].get_d() * log_q[x];
  }
  return s;
}

std::vector<double> normalized_exp(const std::vector<double>& logw) {
  const double mx = *std::max_element(logw.begin(), logw.end());
  std::vector<double> p(logw.size());
  double z = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(logw[i] - mx);
    z += p[i];
  }
  for (auto& v : p) v /= z;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Distribution

Distribution Distribution::exact(std::vector<Rational> p) {
  Rational sum;
  for (const auto& v : p) {
    if (v.sign() < 0) throw std::invalid_argument("negative probability");
    sum += v;
  }
  if (sum != Rational(1)) throw std::invalid_argument("probabilities sum to " + sum.to_string() + ", not 1");
  Distribution d;
  d.mode_ = Mode::Exact;
  d.approx_.reserve(p.size());
  for (const auto& v : p) d.approx_.push_back(v.to_double());
  d.exact_ = std::move(p);
  return d;
}

Distribution Distribution::approximate(std::vector<double> p, double tol) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("probabilities must be finite and nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("probabilities do not sum to 1 within tolerance");
  Distribution d;
  d.mode_ = Mode::Float;
  d.approx_ = std::move(p);
  return d;
}

const std::vector<Rational>& Distribution::exact_values() const {
  if (mode_ != Mode::Exact) throw std::logic_error("float distribution has no exact values");
  return exact_;
}

IndexSet Distribution::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < approx_.size(); ++i) {
    const bool nonzero = mode_ == Mode::Exact ? !exact_[i].is_zero() : approx_[i] != 0.0;
    if (nonzero) s.insert(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Family

ExponentialFamily::ExponentialFamily(Matrix a, Vector q) : q_(std::move(q)) {
  if (a.cols() == 0) throw std::invalid_argument("empty state space");
  if (q_.size() != a.cols()) throw std::invalid_argument("reference measure length does not match matrix width");
  for (const auto& v : q_)
    if (v.sign() <= 0) throw std::invalid_argument("reference measure must be positive");
  a_ = with_constants_row(a);
  augmented_ = a_.rows() != a.rows();
  rank_ = rank(a_);
  for (auto& c : enumerate_circuits(a_)) {
    ImplicitEquation eq{c, c.positive_part(), c.negative_part()};
    equations_.push_back(std::move(eq));
  }
}

ExponentialFamily ExponentialFamily::uniform(Matrix a) {
  Vector q(a.cols());
  for (auto& v : q) v = 1;
  return ExponentialFamily(std::move(a), std::move(q));
}

std::vector<ImplicitEquation> implicit_equations(const ExponentialFamily& f) { return f.equations(); }

Distribution parametrize(const ExponentialFamily& f, const Vector& t_in) {
  const Matrix& a = f.matrix();
  Vector t = t_in;
  if (f.augmented() && t.size() + 1 == a.rows()) {
    std::vector<Rational> padded(t.begin(), t.end());
    padded.emplace_back(1);
    t = Vector(std::move(padded));
  }
  if (t.size() != a.rows()) throw std::invalid_argument("parameter vector length does not match matrix rows");
  for (const auto& v : t)
    if (v.sign() <= 0) throw std::invalid_argument("parameters must be positive");
  if (!a.is_integral()) throw std::invalid_argument("exact parametrization needs an integer matrix; use float mode");

  std::vector<Rational> w(a.cols());
  Rational z;
  for (std::size_t x = 0; x < a.cols(); ++x) {
    Rational v = f.reference()[x];
    for (std::size_t j = 0; j < a.rows(); ++j) {
      const Integer e = a(j, x).numerator();
      if (e != 0) v *= t[j].pow(small_exponent(e));
    }
    z += v;
    w[x] = std::move(v);
  }
  for (auto& v : w) v /= z;
  return Distribution::exact(std::move(w));
}

Distribution parametrize_theta(const ExponentialFamily& f, std::span<const double> theta_in) {
  const Matrix& a = f.matrix();
  std::vector<double> theta(theta_in.begin(), theta_in.end());
  if (f.augmented() && theta.size() + 1 == a.rows()) theta.push_back(0.0);
  if (theta.size() != a.rows()) throw std::invalid_argument("parameter vector length does not match matrix rows");
  std::vector<double> logw(a.cols());
  for (std::size_t x = 0; x < a.cols(); ++x) {
    double s = std::log(f.reference()[x].to_double());
    for (std::size_t j = 0; j < a.rows(); ++j) s += theta[j] * a(j, x).to_double();
    logw[x] = s;
  }
  return Distribution::approximate(normalized_exp(logw), 1e-9);
}

ClosureVerdict in_closure(const ExponentialFamily& f, const Distribution& p, double tol, Execution exec) {
  if (p.size() != f.states()) throw std::invalid_argument("distribution length does not match state space");
  const auto& eqs = f.equations();
  const auto n = static_cast<long>(eqs.size());
  std::vector<std::optional<EquationResidual>> result(eqs.size());
  const int threads = exec == Execution::Parallel ? thread_count() : 1;
  std::vector<double> log_q;
  for (const auto& v : f.reference()) log_q.push_back(std::log(v.to_double()));

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (long i = 0; i < n; ++i) {
    const ImplicitEquation& eq = eqs[static_cast<std::size_t>(i)];
    EquationResidual r{eq.circuit, {}, {}, 0.0, 0.0, 0.0};
    bool holds = false;
    if (p.is_exact()) {
      r.lhs = monomial(p.exact_values(), eq.lhs_exponents, f.reference(), eq.rhs_exponents);
      r.rhs = monomial(p.exact_values(), eq.rhs_exponents, f.reference(), eq.lhs_exponents);
      r.lhs_value = r.lhs.to_double();
      r.rhs_value = r.rhs.to_double();
      holds = r.lhs == r.rhs;
      const Rational big = std::max(r.lhs, r.rhs);
      r.relative_residual = big.is_zero() ? 0.0 : ((r.lhs - r.rhs).abs() / big).to_double();
    } else {
      const double ll = log_monomial(p.values(), eq.lhs_exponents, log_q, eq.rhs_exponents);
      const double lr = log_monomial(p.values(), eq.rhs_exponents, log_q, eq.lhs_exponents);
      r.lhs_value = std::exp(ll);
      r.rhs_value = std::exp(lr);
      if (std::isinf(ll) && std::isinf(lr)) {
        r.relative_residual = 0.0;
      } else if (std::isinf(ll) || std::isinf(lr)) {
        r.relative_residual = 1.0;
      } else {
        r.relative_residual = -std::expm1(-std::abs(ll - lr));
      }
      holds = r.relative_residual <= tol;
    }
    if (!holds) result[static_cast<std::size_t>(i)] = std::move(r);
  }

  ClosureVerdict verdict;
  for (auto& r : result)
    if (r) verdict.violated.push_back(std::move(*r));
  verdict.member = verdict.violated.empty();
  return verdict;
}

bool in_family_full_support(const ExponentialFamily& f, const Distribution& p, double tol) {
  if (p.size() != f.states()) throw std::invalid_argument("distribution length does not match state space");
  if (p.support() != IndexSet::full(f.states())) throw std::invalid_argument("distribution lacks full support");
  const auto basis = kernel_basis(f.matrix());
  for (const auto& kv : basis) {
    const CircuitVector n = CircuitVector::primitive(kv);
    if (p.is_exact()) {
      std::vector<Rational> ratio(f.states());
      for (std::size_t x = 0; x < ratio.size(); ++x) ratio[x] = p.exact_values()[x] / f.reference()[x];
      Vector ones(f.states());
      for (auto& v : ones) v = 1;
      if (monomial(ratio, n.positive_part(), ones, n.negative_part()) !=
          monomial(ratio, n.negative_part(), ones, n.positive_part()))
        return false;
    } else {
      double sum = 0.0, scale = 0.0;
      for (std::size_t x = 0; x < f.states(); ++x) {
        if (n[x] == 0) continue;
        const double term = n[x].get_d() * std::log(p.values()[x] / f.reference()[x].to_double());
        sum += term;
        scale += std::abs(term);
      }
      if (std::abs(sum) > tol * std::max(1.0, scale)) return false;
    }
  }
  return true;
}

Distribution boundary_sequence(const ExponentialFamily& f, IndexSet s, const Distribution& target, double mu,
                               double tol) {
  const Matrix& a = f.matrix();
  if (target.size() != f.states()) throw std::invalid_argument("distribution length does not match state space");
  if (s.empty()) throw std::invalid_argument("support set must be nonempty");
  if (!is_facial(a, s)) throw std::invalid_argument("set is not facial");
  if (target.support() != s) throw std::invalid_argument("target support differs from the given set");

  const auto cert = facial_certificate(a, s);
  const Vector& c = std::get<FacialCertificate>(cert).c;

  // d from an independent subset of the columns on S, then checked on the rest.
  const auto cols = s.indices();
  std::vector<double> log_ratio(f.states(), 0.0);
  for (auto x : cols) log_ratio[x] = std::log(target.values()[x] / f.reference()[x].to_double());
  const auto pivots = row_reduce(a.select_columns(cols)).pivots;
  std::vector<std::size_t> basis_cols;
  for (auto j : pivots) basis_cols.push_back(cols[j]);
  Vector rhs(basis_cols.size());
  for (std::size_t i = 0; i < basis_cols.size(); ++i) rhs[i] = Rational::from_double(log_ratio[basis_cols[i]]);
  const auto sol = solve(a.select_columns(basis_cols).transposed(), rhs);
  const Vector& d = std::get<Vector>(sol);  // independent columns: always consistent

  std::vector<double> logw(f.states());
  for (std::size_t x = 0; x < f.states(); ++x) {
    const Vector ax = a.column(x);
    const double dx = dot(d, ax).to_double();
    if (s.contains(x) && std::abs(dx - log_ratio[x]) > tol * std::max(1.0, std::abs(log_ratio[x])))
      throw std::domain_error("log-linear system on the support is inconsistent; target violates the implicit equations");
    logw[x] = std::log(f.reference()[x].to_double()) + mu * dot(c, ax).to_double() + dx;
  }
  return Distribution::approximate(normalized_exp(logw), 1e-9);
}

Vector moment_map(const ExponentialFamily& f, const Distribution& p) {
  if (p.size() != f.states()) throw std::invalid_argument("distribution length does not match state space");
  Vector pv(f.states());
  for (std::size_t x = 0; x < f.states(); ++x)
    pv[x] = p.is_exact() ? p.exact_values()[x] : Rational::from_double(p.values()[x]);
  return f.matrix() * pv;
}

double l1_distance(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distribution length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a.values()[i] - b.values()[i]);
  return s;
}

}  // namespace omfam
