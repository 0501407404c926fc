#include <doctest.h>

#include <random>

#include "omfam/linalg.hpp"
#include "omfam/models.hpp"
#include "omfam/oriented_matroid.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace omfam;
using testing::as_integer_lists;

namespace {

std::vector<std::vector<Integer>> ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) {
    std::vector<Integer> v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedSubset ss(std::initializer_list<std::size_t> plus, std::initializer_list<std::size_t> minus) {
  SignedSubset x;
  for (auto i : plus) x.plus.insert(i - 1);
  for (auto i : minus) x.minus.insert(i - 1);
  return x;
}

Vector random_kernel_vector(const Matrix& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  Vector n(a.cols());
  for (const auto& b : kernel_basis(a)) n += Rational(coef(rng)) * b;
  return n;
}

}  // namespace

TEST_CASE("circuits of the worked examples") {
  CHECK(as_integer_lists(enumerate_circuits(example1_matrix(2))) ==
        ints({{0, 0, 1, -1}, {1, 2, 0, -3}, {1, 2, -3, 0}}));
  CHECK(as_integer_lists(enumerate_circuits(example1_matrix(3))) ==
        ints({{0, 0, 1, -1}, {1, 3, 0, -4}, {1, 3, -4, 0}}));
  CHECK(as_integer_lists(enumerate_circuits(example1_matrix(Rational(1, 2)))) ==
        ints({{0, 0, 1, -1}, {2, 1, 0, -3}, {2, 1, -3, 0}}));
  CHECK(as_integer_lists(enumerate_circuits(parity_model_matrix(2))) == ints({{1, -1, -1, 1}}));
  CHECK(as_integer_lists(enumerate_circuits(moment_matrix(4))) == ints({{1, -3, 3, -1}}));
  CHECK(enumerate_circuits(Matrix::identity(4)).empty());
}

TEST_CASE("zero columns are loops") {
  const Matrix a{{1, 0, 1}, {0, 0, 1}};
  CHECK(as_integer_lists(enumerate_circuits(a)) == ints({{0, 1, 0}}));
}

TEST_CASE("sign_of") {
  CHECK(sign_of(Vector{1, 2, -3, 0}) == ss({1, 2}, {3}));
  CHECK(sign_of(Vector{0, 0, 0}).empty());
  CHECK(sign_of(Vector{0, 0, 1, -1}) == ss({3}, {4}));
  const auto sv = ss({1, 2}, {3}).sign_vector(4);
  CHECK(sv == std::vector<int>{1, 1, -1, 0});
  CHECK(SignedSubset::from_sign_vector(sv) == ss({1, 2}, {3}));
}

TEST_CASE("signed circuits") {
  const auto om = signed_circuits(example1_matrix(2));
  CHECK(om.circuits.size() == 6);
  for (const auto& x : om.circuits) CHECK(om.contains(-x));
  const auto parity = signed_circuits(parity_model_matrix(2));
  REQUIRE(parity.circuits.size() == 2);
  CHECK(parity.contains(ss({1, 4}, {2, 3})));
  CHECK(parity.contains(ss({2, 3}, {1, 4})));
  CHECK(signed_circuits(Matrix::identity(3)).circuits.empty());
}

TEST_CASE("axioms check finds constructed violations") {
  CHECK(axioms_check(signed_circuits(example1_matrix(2))).valid());

  const auto c1 = axioms_check(OrientedMatroid::from_circuits(2, {ss({1}, {2})}));
  REQUIRE(!c1.valid());
  CHECK(c1.violations.front().axiom == Axiom::Symmetry);

  const auto c2 = axioms_check(
      OrientedMatroid::from_circuits(3, {ss({1}, {2}), ss({2}, {1}), ss({1, 3}, {2}), ss({2}, {1, 3})}));
  bool nested = false;
  for (const auto& v : c2.violations) nested = nested || v.axiom == Axiom::Incomparability;
  CHECK(nested);

  // ±({1},{2}) and ±({2},{3}) need a circuit eliminating 2, e.g. ({1},{3}).
  const auto c3 = axioms_check(OrientedMatroid::from_circuits(3, {ss({1}, {2}), ss({2}, {1}), ss({2}, {3}), ss({3}, {2})}));
  bool elimination = false;
  for (const auto& v : c3.violations) elimination = elimination || v.axiom == Axiom::WeakElimination;
  CHECK(elimination);
  CHECK(!c3.violations.front().describe().empty());
}

TEST_CASE("compose") {
  const auto x = ss({1, 3}, {2});
  CHECK(compose(x, x) == x);
  CHECK(compose(ss({1}, {}), ss({}, {1, 2})) == ss({1}, {2}));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vector n(6), np(6);
    for (std::size_t i = 0; i < 6; ++i) {
      n[i] = e(rng);
      np[i] = e(rng);
    }
    Rational eps = 1;
    bool any = false;
    for (std::size_t i = 0; i < 6; ++i)
      if (!n[i].is_zero() && !np[i].is_zero()) {
        const Rational r = n[i].abs() / np[i].abs();
        if (!any || r < eps) eps = r;
        any = true;
      }
    eps = eps / 2;
    CHECK(sign_of(n + eps * np) == compose(sign_of(n), sign_of(np)));
    const auto y = sign_of(np), z = SignedSubset{IndexSet(trial % 7), IndexSet(8 + trial % 5) - IndexSet(trial % 7)};
    CHECK(compose(compose(sign_of(n), y), z) == compose(sign_of(n), compose(y, z)));
  }
}

TEST_CASE("sign-consistent circuit") {
  const Matrix a = example1_matrix(2);
  const auto c = sign_consistent_circuit(a, Vector{1, 2, -1, -2});
  const bool expected = c.entries() == std::vector<Integer>{1, 2, -3, 0} || c.entries() == std::vector<Integer>{1, 2, 0, -3};
  CHECK(expected);

  CHECK(sign_consistent_circuit(a, Vector{0, 0, -2, 2}).entries() == std::vector<Integer>{0, 0, -1, 1});

  const Vector parity = parity_vector(3);
  const auto pc = sign_consistent_circuit(parity_model_matrix(3), parity);
  CHECK(pc.to_vector() == parity);

  CHECK_THROWS_AS(sign_consistent_circuit(a, Vector{0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sign_consistent_circuit(a, Vector{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("conformal decomposition") {
  const Matrix a = example1_matrix(2);
  const auto terms = conformal_decomposition(a, Vector{1, 2, -1, -2});
  Vector sum(4);
  for (const auto& t : terms) {
    CHECK(t.coefficient > 0);
    sum += t.coefficient * t.circuit.to_vector();
  }
  CHECK(sum == Vector{1, 2, -1, -2});
  REQUIRE(terms.size() == 2);

  const auto single = conformal_decomposition(a, Vector{0, 0, 1, -1});
  REQUIRE(single.size() == 1);
  CHECK(single[0].coefficient == 1);
  CHECK(conformal_decomposition(a, Vector(4)).empty());
  CHECK_THROWS_AS(conformal_decomposition(a, Vector{1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("cocircuits") {
  const auto co = cocircuits(example1_matrix(2));
  CHECK(co.circuits.size() == 6);
  CHECK(co.contains(ss({2}, {1})));
  CHECK(co.contains(ss({2, 3, 4}, {})));
  CHECK(co.contains(ss({1, 3, 4}, {})));

  const auto ones = cocircuits(Matrix{{1, 1, 1}});
  REQUIRE(ones.circuits.size() == 2);
  CHECK(ones.contains(ss({1, 2, 3}, {})));
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(example1_matrix(2)));
  CHECK(!is_acyclic(Matrix{{1, -1}}));
  CHECK(is_acyclic(parity_model_matrix(3)));
}

TEST_CASE("circuits agree with the determinant oracle on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> rows(1, 4), cols(2, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix a = testing::random_integer_matrix(rng, rows(rng), cols(rng), -2, 2);
    const auto circuits = enumerate_circuits(a);
    const auto oracle = testing::brute_force_circuits(a);
    CHECK(as_integer_lists(circuits) == oracle);
    CHECK(Integer(circuits.size()) <= circuit_count_bound(a));
    CHECK(enumerate_circuits(a, Execution::Serial).size() == circuits.size());
    CHECK(is_acyclic(a) == testing::acyclic_by_circuits(oracle));
    for (const auto& c : circuits) {
      CHECK((a * c.to_vector()).is_zero());
      CHECK(c == c.canonical());
    }
  }
}

TEST_CASE("axioms hold for circuits and cocircuits of random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = testing::random_integer_matrix(rng, 1 + trial % 3, 4 + trial % 4, -2, 2);
    CHECK(axioms_check(signed_circuits(a)).valid());
    CHECK(axioms_check(cocircuits(a)).valid());
    CHECK(axioms_check(signed_circuits(a), Execution::Serial).valid());
  }
}

TEST_CASE("conformal decomposition of random kernel vectors") {
  std::mt19937_64 rng(17);
  for (const auto& e : testing::corpus()) {
    CAPTURE(e.name);
    for (int i = 0; i < 3; ++i) {
      const Vector n = random_kernel_vector(e.matrix, rng);
      Vector sum(n.size());
      for (const auto& t : conformal_decomposition(e.matrix, n)) {
        CHECK(t.coefficient > 0);
        CHECK(sign_of(t.circuit).sign_consistent_with(sign_of(n)));
        sum += t.coefficient * t.circuit.to_vector();
      }
      CHECK(sum == n);
    }
  }
}
