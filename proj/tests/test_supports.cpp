#include <doctest.h>

#include <cstdlib>
#include <random>
#include <variant>

#include "omfam/linalg.hpp"
#include "omfam/models.hpp"
#include "omfam/supports.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace omfam;

namespace {

IndexSet set(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (auto i : one_based) s.insert(i - 1);
  return s;
}

std::vector<IndexSet> sets(std::initializer_list<std::initializer_list<std::size_t>> list) {
  std::vector<IndexSet> out;
  for (const auto& s : list) out.push_back(set(s));
  std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

TEST_CASE("circuit test on the worked examples") {
  const Matrix a = example1_matrix(2);
  CHECK(is_facial(a, set({1})));
  CHECK(is_facial(a, set({2})));
  CHECK(!is_facial(a, set({3, 4})));
  CHECK(!is_facial(a, set({1, 2})));
  CHECK(is_facial(a, IndexSet::full(4)));
  CHECK(is_facial(a, IndexSet()));

  const Matrix p = parity_model_matrix(2);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(is_facial(p, set({i})));
  CHECK(!is_facial(p, set({1, 4})));
}

TEST_CASE("facial certificates") {
  const Matrix a = example1_matrix(2);
  const auto c = facial_certificate(a, set({1}));
  REQUIRE(std::holds_alternative<FacialCertificate>(c));
  const Vector& cv = std::get<FacialCertificate>(c).c;
  CHECK(dot(cv, a.column(0)).is_zero());
  for (std::size_t z = 1; z < 4; ++z) CHECK(dot(cv, a.column(z)) >= 1);

  const auto full = facial_certificate(a, IndexSet::full(4));
  REQUIRE(std::holds_alternative<FacialCertificate>(full));
  CHECK(std::get<FacialCertificate>(full).c.is_zero());

  const auto none = facial_certificate(a, set({3, 4}));
  REQUIRE(std::holds_alternative<FarkasWitness>(none));
  CHECK(is_valid_witness(facial_system(a, set({3, 4})), a.rows(), std::get<FarkasWitness>(none)));
}

TEST_CASE("support enumeration on the worked examples") {
  CHECK(enumerate_supports(example1_matrix(2)).members() == sets({{1}, {2}, {1, 2, 3, 4}}));
  CHECK(enumerate_supports(moment_matrix(4)).members() ==
        sets({{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 2, 3, 4}}));
  const auto parity = enumerate_supports(parity_model_matrix(2));
  CHECK(parity.members() == sets({{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 2, 3, 4}}));
  // augmented automatically
  CHECK(enumerate_supports(Matrix{{0, 1}}).members() == sets({{1}, {2}, {1, 2}}));
}

TEST_CASE("s-vector, f-vector, neighborliness") {
  const auto parity = enumerate_supports(parity_model_matrix(2));
  CHECK(s_vector(parity) == std::vector<std::uint64_t>{4, 4, 0, 1});
  const FVector f = f_vector(parity);
  CHECK(f.dimension == 2);
  CHECK(f.counts == std::vector<std::uint64_t>{4, 4});
  CHECK(f.at(-1) == 1);
  CHECK(f.at(2) == 1);
  CHECK(neighborliness(parity) == 1);

  const auto p3 = enumerate_supports(parity_model_matrix(3));
  CHECK(s_vector(p3)[3] == 68);
  CHECK(neighborliness(p3) == 3);

  const auto ex = enumerate_supports(example1_matrix(2));
  CHECK(s_vector(ex) == std::vector<std::uint64_t>{2, 0, 0, 1});
  CHECK(neighborliness(ex) == 0);

  CHECK(f_vector(enumerate_supports(moment_matrix(4))).counts == std::vector<std::uint64_t>{4, 4});

  const auto simplex = enumerate_supports(Matrix::identity(5));
  const FVector fs = f_vector(simplex);
  CHECK(fs.dimension == 4);
  for (int k = 0; k < 4; ++k) CHECK(fs.at(k) == binomial(5, k + 1));
}

TEST_CASE("uniform on S") {
  const auto f = ExponentialFamily::uniform(example1_matrix(2));
  const auto one = uniform_on(set({1}), f);
  CHECK(one.distribution.exact_values() == std::vector<Rational>{1, 0, 0, 0});
  CHECK(one.verdict.member);
  const auto pair = uniform_on(set({3, 4}), f);
  CHECK(pair.distribution.exact_values() == std::vector<Rational>{0, 0, Rational(1, 2), Rational(1, 2)});
  CHECK(!pair.verdict.member);
  CHECK(uniform_on(IndexSet::full(4), f).verdict.member);
}

TEST_CASE("enumeration matches the scans over the corpus") {
  for (const auto& e : testing::corpus()) {
    CAPTURE(e.name);
    const auto family = enumerate_supports(e.matrix);
    const auto members = family.members();
    CHECK(family.contains(IndexSet::full(e.matrix.cols())));
    if (e.matrix.cols() <= 12) {
      CHECK(members == brute_force_supports(e.matrix).members());
      CHECK(members == brute_force_supports(e.matrix, Execution::Serial).members());
    }
    if (e.matrix.cols() <= 7)
      CHECK(members == testing::brute_force_facial_sets(e.matrix.cols(), testing::brute_force_circuits(e.matrix)));
    // closed under nonempty intersection
    for (auto s : members)
      for (auto t : members)
        if ((s & t).size() > 0) CHECK(family.contains(s & t));
  }
}

TEST_CASE("supports are invariant under invertible row operations and q") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const auto& e : testing::corpus(10)) {
    CAPTURE(e.name);
    const std::size_t d = e.matrix.rows();
    Matrix r(d, d);
    do {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = coef(rng);
    } while (rank(r) != d);
    CHECK(enumerate_supports(r * e.matrix).members() == enumerate_supports(e.matrix).members());
  }
}

TEST_CASE("facial sets: columns off the face stay out of its span") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> w(0, 3);
  for (const auto& e : testing::corpus(6)) {
    CAPTURE(e.name);
    const Matrix& a = e.matrix;
    for (const auto& s : enumerate_supports(a).members()) {
      const auto inside = s.indices();
      const Matrix face = a.select_columns(inside);
      for (int trial = 0; trial < 4; ++trial) {
        Vector alpha(a.cols());
        for (std::size_t x = 0; x < a.cols(); ++x)
          if (!s.contains(x)) alpha[x] = w(rng);
        if (alpha.is_zero()) continue;
        CHECK(std::holds_alternative<Infeasible>(solve(face, a * alpha)));
      }
    }
  }
}

TEST_CASE("thread cap from the environment") {
  setenv("OMFAM_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  const Matrix a = cyclic_matrix(CyclicPolytopeSpec::standard(3, 9));
  CHECK(brute_force_supports(a).members() == enumerate_supports(a).members());
  unsetenv("OMFAM_THREADS");
  CHECK(thread_count() >= 1);
}
