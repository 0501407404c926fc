#include "omfam/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace omfam {

namespace {

struct Row {
  std::vector<Rational> coef;
  Rational rhs;
  bool equality = false;
  std::vector<Rational> mult;  // combination of the original constraints
};

struct Stage {
  std::size_t var = 0;
  std::optional<Row> substitution;
  std::vector<Row> upper;  // coef[var] > 0
  std::vector<Row> lower;  // coef[var] < 0
};

bool zero_coefficients(const Row& r) {
  return std::all_of(r.coef.begin(), r.coef.end(), [](const Rational& c) { return c.is_zero(); });
}

// a += f * b over coefficients, rhs and multipliers.
void add_scaled(Row& a, const Rational& f, const Row& b) {
  for (std::size_t j = 0; j < a.coef.size(); ++j)
    if (!b.coef[j].is_zero()) a.coef[j] += f * b.coef[j];
  a.rhs += f * b.rhs;
  for (std::size_t j = 0; j < a.mult.size(); ++j)
    if (!b.mult[j].is_zero()) a.mult[j] += f * b.mult[j];
}

void scale(Row& r, const Rational& f) {
  for (auto& c : r.coef) c *= f;
  r.rhs *= f;
  for (auto& m : r.mult) m *= f;
}

// Value of the row's left-hand side without variable `skip`.
Rational partial_value(const Row& r, const Vector& x, std::size_t skip) {
  Rational s;
  for (std::size_t j = 0; j < r.coef.size(); ++j)
    if (j != skip && !r.coef[j].is_zero()) s += r.coef[j] * x[j];
  return s;
}

FarkasWitness witness_from(const Row& r) {
  FarkasWitness w{Vector(std::vector<Rational>(r.mult))};
  // An equality-only contradiction 0 = rhs may need flipping to make yᵀz < 0.
  if (r.equality && r.rhs.sign() > 0) w.multipliers *= Rational(-1);
  return w;
}

// Drops trivial rows, merges positive multiples, reports contradictions.
std::optional<FarkasWitness> tidy(std::vector<Row>& rows) {
  std::vector<Row> kept;
  std::map<std::vector<Rational>, std::size_t> by_direction;
  for (auto& r : rows) {
    if (zero_coefficients(r)) {
      if (r.equality ? !r.rhs.is_zero() : r.rhs.sign() < 0) return witness_from(r);
      continue;
    }
    if (r.equality) {
      kept.push_back(std::move(r));
      continue;
    }
    const auto lead = std::find_if(r.coef.begin(), r.coef.end(), [](const Rational& c) { return !c.is_zero(); });
    scale(r, lead->abs().inverse());
    auto [it, inserted] = by_direction.try_emplace(r.coef, kept.size());
    if (inserted) {
      kept.push_back(std::move(r));
    } else if (r.rhs < kept[it->second].rhs) {
      kept[it->second] = std::move(r);
    }
  }
  rows = std::move(kept);
  return std::nullopt;
}

}  // namespace

std::variant<Vector, FarkasWitness> fourier_motzkin(const std::vector<LinearConstraint>& system,
                                                    std::size_t num_vars) {
  const std::size_t n_orig = system.size();
  std::vector<Row> rows;
  rows.reserve(n_orig);
  for (std::size_t i = 0; i < n_orig; ++i) {
    const auto& c = system[i];
    if (c.coefficients.size() != num_vars) throw std::invalid_argument("constraint width mismatch");
    Row r;
    r.coef = c.coefficients.entries();
    r.rhs = c.rhs;
    r.equality = c.relation == Relation::Equal;
    r.mult.assign(n_orig, Rational(0));
    r.mult[i] = 1;
    rows.push_back(std::move(r));
  }
  if (auto w = tidy(rows)) return *w;

  std::vector<Stage> stages;
  for (std::size_t k = 0; k < num_vars; ++k) {
    Stage stage;
    stage.var = k;
    auto eq = std::find_if(rows.begin(), rows.end(), [k](const Row& r) { return r.equality && !r.coef[k].is_zero(); });
    if (eq != rows.end()) {
      Row pivot = std::move(*eq);
      rows.erase(eq);
      for (auto& r : rows) {
        if (r.coef[k].is_zero()) continue;
        add_scaled(r, -(r.coef[k] / pivot.coef[k]), pivot);
      }
      stage.substitution = std::move(pivot);
    } else {
      std::vector<Row> next;
      for (auto& r : rows) {
        const int s = r.coef[k].sign();
        if (s > 0) stage.upper.push_back(std::move(r));
        else if (s < 0) stage.lower.push_back(std::move(r));
        else next.push_back(std::move(r));
      }
      for (const Row& p : stage.upper) {
        for (const Row& q : stage.lower) {
          Row combo = p;
          scale(combo, -q.coef[k]);
          add_scaled(combo, p.coef[k], q);
          combo.coef[k] = 0;
          next.push_back(std::move(combo));
        }
      }
      rows = std::move(next);
    }
    stages.push_back(std::move(stage));
    if (auto w = tidy(rows)) return *w;
  }

  Vector x(num_vars);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t k = it->var;
    if (it->substitution) {
      const Row& r = *it->substitution;
      x[k] = (r.rhs - partial_value(r, x, k)) / r.coef[k];
      continue;
    }
    std::optional<Rational> lo, hi;
    for (const Row& r : it->upper) {
      const Rational bound = (r.rhs - partial_value(r, x, k)) / r.coef[k];
      if (!hi || bound < *hi) hi = bound;
    }
    for (const Row& r : it->lower) {
      const Rational bound = (r.rhs - partial_value(r, x, k)) / r.coef[k];
      if (!lo || bound > *lo) lo = bound;
    }
    Rational v = 0;
    if (lo && v < *lo) v = *lo;
    if (hi && v > *hi) v = *hi;
    x[k] = v;
  }
  if (!satisfies(system, x)) throw std::logic_error("Fourier-Motzkin back-substitution produced an infeasible point");
  return x;
}

bool satisfies(const std::vector<LinearConstraint>& system, const Vector& x) {
  for (const auto& c : system) {
    const Rational lhs = dot(c.coefficients, x);
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

bool is_valid_witness(const std::vector<LinearConstraint>& system, std::size_t num_vars, const FarkasWitness& w) {
  if (w.multipliers.size() != system.size()) return false;
  Vector combo(num_vars);
  Rational rhs;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rational& y = w.multipliers[i];
    if (system[i].relation == Relation::LessEqual && y.sign() < 0) return false;
    if (y.is_zero()) continue;
    combo += y * system[i].coefficients;
    rhs += y * system[i].rhs;
  }
  return combo.is_zero() && rhs.sign() < 0;
}

}  // namespace omfam
