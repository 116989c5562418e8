#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "properties.hpp"
#include "support.hpp"
#include "toricbundle/errors.hpp"
#include "toricbundle/liealg.hpp"

using namespace toricbundle;

namespace {

WeightVector wv(std::vector<std::int64_t> w) { return WeightVector{std::move(w)}; }

MatrixSubspace random_subspace(std::mt19937_64& rng, std::size_t r) {
  std::vector<QMatrix> gens;
  const auto count = support::uniform(rng, 0, static_cast<std::int64_t>(r * r));
  for (std::int64_t i = 0; i < count; ++i) gens.push_back(support::random_matrix(rng, r, 2, 0.3));
  return MatrixSubspace::span(r, gens);
}

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("parabolic patterns") {
    const ZeroPattern zero = parabolic_pattern(wv({0, 0, 0}));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(zero.allowed(i, j));

    const ZeroPattern upper = parabolic_pattern(wv({1, 0, -1}));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(upper.allowed(i, j) == (i <= j));

    const ZeroPattern p = parabolic_pattern(wv({0, 1}));
    CHECK(p.allowed(0, 0));
    CHECK(p.allowed(1, 0));
    CHECK(p.allowed(1, 1));
    CHECK_FALSE(p.allowed(0, 1));
  }

  TEST_CASE("intersection of opposite patterns is the diagonal") {
    const MatrixSubspace up = pattern_subspace(parabolic_pattern(wv({1, 0})));
    const MatrixSubspace down = pattern_subspace(parabolic_pattern(wv({0, 1})));
    const MatrixSubspace diag = intersect_subspaces(up, down);
    CHECK(subspace_dim(diag) == 2);
    CHECK(diag == MatrixSubspace::span(2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)}));
  }

  TEST_CASE("P^2 tangent computation leaves the scalars") {
    const MatrixSubspace diag = MatrixSubspace::span(2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)});
    const QMatrix c{{-1, 0}, {-1, 1}};
    const MatrixSubspace conj = conjugate_subspace(pattern_subspace(parabolic_pattern(wv({1, 0}))), c);
    const MatrixSubspace scalars = intersect_subspaces(diag, conj);
    CHECK(subspace_dim(scalars) == 1);
    CHECK(contains_matrix(scalars, QMatrix::identity(2)));
    // diag(a, b) maps to [[a,0],[a-b,b]] under the conjugated limit, forcing a = b.
    CHECK_FALSE(contains_matrix(conj, QMatrix{{1, 0}, {0, 2}}));
  }

  TEST_CASE("conjugation by the identity is trivial") {
    const MatrixSubspace s = pattern_subspace(parabolic_pattern(wv({2, -1, 0})));
    CHECK(conjugate_subspace(s, QMatrix::identity(3)) == s);
    CHECK_THROWS_AS(conjugate_subspace(s, QMatrix(3, 3)), SingularMatrix);
  }

  TEST_CASE("trace zero and centralizers") {
    CHECK(subspace_dim(trace_zero_restrict(MatrixSubspace::full(3))) == 8);
    CHECK(subspace_dim(centralizer(QMatrix{{1, 0}, {0, 2}})) == 2);
    CHECK(subspace_dim(centralizer(QMatrix::identity(3))) == 9);
    CHECK(subspace_dim(centralizer(QMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 3);
    CHECK_THROWS_AS(intersect_subspaces(MatrixSubspace::full(2), MatrixSubspace::full(3)), DimensionMismatch);
  }

  TEST_CASE("patterns always contain the diagonal") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
      const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, 5));
      WeightVector w;
      for (std::size_t k = 0; k < r; ++k) w.weights.push_back(support::uniform(rng, -4, 4));
      const MatrixSubspace s = pattern_subspace(parabolic_pattern(w));
      CHECK(s.contains(QMatrix::identity(r)));
      for (std::size_t k = 0; k < r; ++k) CHECK(s.contains(unit_matrix(r, k, k)));
    }
  }

  TEST_CASE("double conjugation and the dimension formula") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
      const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, 4));
      const MatrixSubspace a = random_subspace(rng, r);
      const MatrixSubspace b = random_subspace(rng, r);
      const QMatrix c = support::random_invertible(rng, r, 3);
      CHECK(conjugate_subspace(conjugate_subspace(a, c), rational_inverse(c)) == a);
      CHECK(subspace_dim(intersect_subspaces(a, b)) + subspace_dim(sum_subspaces(a, b)) ==
            subspace_dim(a) + subspace_dim(b));
      CHECK(a.contains(intersect_subspaces(a, b)));
      CHECK(sum_subspaces(a, b).contains(b));
    }
  }

  TEST_CASE("membership agrees with the limit oracle") {
    const auto out = properties::limit_semantics(400);
    CHECK_MESSAGE(out.ok, out.failure);
    CHECK(out.instances == 400);
  }
}
