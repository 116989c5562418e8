#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "toricbundle/analysis.hpp"
#include "toricbundle/errors.hpp"
#include "toricbundle/polynomial.hpp"

using namespace toricbundle;

namespace {

KaneyamaData tangent_p2() { return tangent_frame_data(projective_space(2)); }
KaneyamaData tangent_p2_sl3() { return extend_structure_group(tangent_p2(), DeterminantBalancing{}); }
KaneyamaData tangent_p1p1() { return tangent_frame_data(kleinschmidt(1, {0})); }

// Conjugated one-parameter subgroup C diag(z^w) C^{-1} evaluated at z.
QMatrix conjugated_at(const QMatrix& c, const WeightVector& w, const Rational& z) {
  QMatrix d(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational p = 1;
    for (std::int64_t k = 0; k < (w.weights[i] < 0 ? -w.weights[i] : w.weights[i]); ++k) p *= z;
    d(i, i) = w.weights[i] < 0 ? Rational(1) / p : p;
  }
  return c * d * rational_inverse(c);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("ray weight vectors") {
    CHECK(ray_weight_vector(tangent_p2(), 0, 1) == WeightVector{{1, 0}});
    CHECK(ray_weight_vector(tangent_p2_sl3(), 0, 1) == WeightVector{{1, 0, -1}});
    const KaneyamaData sp = support::fixture_data("split_p2");
    CHECK(ray_weight_vector(sp, 1, 0) == WeightVector{{1, 0}});
    CHECK(ray_weight_vector(sp, 0, 2) == WeightVector{{0, 1}});
    CHECK_THROWS_AS(ray_weight_vector(tangent_p2(), 0, 0), InputError);
  }

  TEST_CASE("conjugated subgroup at e_0") {
    const KaneyamaData d = tangent_p2();
    const auto home = d.fan().home_cone(0);
    REQUIRE(home == 1u);
    const WeightVector w = ray_weight_vector(d, 1, 0);
    CHECK(w == WeightVector{{1, 0}});
    for (int z : {2, 3, -5}) {
      const Rational q(z);
      CHECK(conjugated_at(d.transition(0, 1), w, q) == QMatrix{{q, 0}, {q - 1, 1}});
    }
    const KaneyamaData sl = tangent_p2_sl3();
    const WeightVector wsl = ray_weight_vector(sl, 1, 0);
    const Rational q(3);
    CHECK(conjugated_at(sl.transition(0, 1), wsl, q) == QMatrix{{q, 0, 0}, {q - 1, 1, 0}, {0, 0, 1 / q}});
  }

  TEST_CASE("parabolic at a ray of the base cone is the plain pattern") {
    const KaneyamaData d = tangent_p2();
    CHECK(parabolic_at_ray(d, 0, 1) == pattern_subspace(parabolic_pattern(WeightVector{{1, 0}})));
  }

  TEST_CASE("automorphism Lie algebras") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const KaneyamaData d = tangent_frame_data(projective_space(n));
      const AutReport a = aut_lie_algebra(d, 0);
      CHECK(a.dim() == 1);
      CHECK(a.lie_algebra.basis() == std::vector<QMatrix>{QMatrix::identity(n)});
      CHECK(a.per_ray.size() == n + 1);
    }
    const AutReport sl = aut_lie_algebra(tangent_p2_sl3(), 0);
    CHECK(sl.dim() == 3);
    CHECK(sl.lie_algebra == MatrixSubspace::span(3, {unit_matrix(3, 0, 2), unit_matrix(3, 1, 2), QMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}}));
    CHECK(aut_lie_algebra(tangent_p1p1(), 0).dim() == 2);
    CHECK(aut_lie_algebra(tangent_frame_data(kleinschmidt(1, {1})), 0).dim() == 1);
    CHECK_THROWS_AS(aut_lie_algebra(support::fixture_data("broken_cocycle"), 0), ValidationError);
  }

  TEST_CASE("split data against tangent data on P^2") {
    const KaneyamaData sp = support::fixture_data("split_p2");
    const AutReport a = aut_lie_algebra(sp, 0);
    // Diagonal matrices only: O(2) and O(1)-type summands admit no invariant maps between them here.
    CHECK(a.dim() == 2);
    CHECK(oracle::aut_dim(sp, 0) == 2);
    CHECK(a.dim() != aut_lie_algebra(tangent_p2(), 0).dim());
    const KaneyamaData trivial = split_data(projective_space(2), {{0, 0}, {0, 0}, {0, 0}}, GroupTag{GroupKind::GL, 2});
    CHECK(aut_lie_algebra(trivial, 0).dim() == 4);
  }

  TEST_CASE("group-level automorphism test") {
    const KaneyamaData d = tangent_p2();
    CHECK(is_equivariant_automorphism(d, 0, QMatrix::identity(2)));
    CHECK(is_equivariant_automorphism(d, 0, Rational(5) * QMatrix::identity(2)));
    CHECK_FALSE(is_equivariant_automorphism(d, 0, QMatrix{{2, 0}, {0, 3}}));
    CHECK_THROWS_AS(is_equivariant_automorphism(d, 0, QMatrix(2, 2)), SingularMatrix);
    CHECK_THROWS_AS(is_equivariant_automorphism(d, 0, QMatrix::identity(3)), DimensionMismatch);

    const KaneyamaData sl = tangent_p2_sl3();
    CHECK(is_equivariant_automorphism(sl, 0, QMatrix{{2, 0, 5}, {0, 2, 7}, {0, 0, Rational(1, 4)}}));
    CHECK_FALSE(is_equivariant_automorphism(sl, 0, QMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, Rational(1, 6)}}));
    CHECK_FALSE(is_equivariant_automorphism(sl, 0, Rational(2) * QMatrix::identity(3)));
  }

  TEST_CASE("Levi reductions") {
    CHECK(levi_reduction_check(tangent_p2(), 0, {{0, 1}}));
    CHECK_FALSE(levi_reduction_check(tangent_p2(), 0, {{0}, {1}}));
    CHECK(levi_reduction_check(tangent_p1p1(), 0, {{0}, {1}}));
    CHECK(levi_reduction_check(tangent_p2_sl3(), 0, {{0, 1}, {2}}));
    CHECK_FALSE(levi_reduction_check(tangent_p2_sl3(), 0, {{0}, {1}, {2}}));
    CHECK(levi_reduction_check(tangent_p2_sl3(), 0, {{0, 1, 2}}));
    CHECK_THROWS_AS(levi_reduction_check(tangent_p2(), 0, {{0}}), InputError);
    CHECK_THROWS_AS(levi_reduction_check(tangent_p2(), 0, {{0, 1}, {1}}), InputError);
    CHECK_THROWS_AS(levi_reduction_check(tangent_p2(), 0, {{0, 1}, {}}), InputError);
  }

  TEST_CASE("splitting verdicts") {
    CHECK(split_check(tangent_p2(), 0).kind == SplitVerdict::Kind::NotSplit);
    const SplitVerdict v = split_check(tangent_p1p1(), 0);
    REQUIRE(v.kind == SplitVerdict::Kind::Split);
    REQUIRE(v.certificate);
    CHECK(verify_split_certificate(tangent_p1p1(), 0, *v.certificate));
    CHECK(is_squarefree(characteristic_polynomial(*v.certificate)));
    CHECK_FALSE(verify_split_certificate(tangent_p1p1(), 0, QMatrix::identity(2)));
    CHECK_FALSE(verify_split_certificate(tangent_p2(), 0, QMatrix{{1, 0}, {0, 2}}));

    const SplitVerdict again = split_check(tangent_p1p1(), 0);
    CHECK(again.certificate == v.certificate);

    // T(P^2) + O has a 4-dimensional Aut but no torus of rank 3: the sampler cannot certify.
    const SplitVerdict unknown = split_check(support::fixture_data("tangent_p2_in_gl3_on_p2"), 0, SplitOptions{8, 1, 10});
    CHECK(unknown.kind == SplitVerdict::Kind::Unknown);

    const KaneyamaData sp = support::fixture_data("split_p2");
    CHECK(split_check(sp, 0).kind == SplitVerdict::Kind::Split);
    CHECK(split_check(support::fixture_data("split_p2_sl3"), 0).kind == SplitVerdict::Kind::Split);
    CHECK(split_check(tangent_p2_sl3(), 0).kind == SplitVerdict::Kind::Unknown);
  }

  TEST_CASE("morphism witnesses") {
    const KaneyamaData d = tangent_p2();
    const std::vector<QMatrix> ids(3, QMatrix::identity(2));
    CHECK(verify_morphism_witness(d, d, 0, MorphismWitness{QMatrix::identity(2), ids}));
    const std::vector<QMatrix> scalars(3, Rational(4) * QMatrix::identity(2));
    CHECK(verify_morphism_witness(d, d, 0, MorphismWitness{Rational(4) * QMatrix::identity(2), scalars}));
    CHECK_FALSE(verify_morphism_witness(d, d, 0, MorphismWitness{QMatrix{{2, 0}, {0, 3}}, ids}));
    // Swapping slots breaks intertwining of distinct characters.
    std::vector<QMatrix> swaps = ids;
    swaps[0] = QMatrix{{0, 1}, {1, 0}};
    CHECK_FALSE(verify_morphism_witness(d, d, 0, MorphismWitness{QMatrix::identity(2), swaps}));
    CHECK_THROWS_AS(verify_morphism_witness(d, tangent_p1p1(), 0, MorphismWitness{QMatrix::identity(2), ids}),
                    DimensionMismatch);
  }

  TEST_CASE("morphism witnesses between equivalent data") {
    // The identity map from d to its image under an equivalence witness (eta, beta): g0 = beta_base^{-1},
    // and g_sigma inverts the equal-character part of beta_sigma (its value at the fixed point).
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
      const KaneyamaData src = support::random_valid_data(rng, 3);
      const EquivalenceWitness w = support::random_witness(src, rng);
      const KaneyamaData moved = apply_equivalence_witness(src, w);
      const std::size_t r = src.rank();
      MorphismWitness m;
      m.g0 = rational_inverse(w.beta[0]);
      for (std::size_t c = 0; c < src.num_cones(); ++c) {
        QMatrix lead(r, r);
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (src.xi(c)[a] == moved.xi(c)[b]) lead(a, b) = w.beta[c](a, b);
        m.g.push_back(rational_inverse(lead));
      }
      CHECK(verify_morphism_witness(src, moved, 0, m));
    }
  }

  TEST_CASE("reduction witnesses") {
    const KaneyamaData d = tangent_p2();
    const std::vector<QMatrix> ids(3, QMatrix::identity(2));
    CHECK(verify_reduction_witness(d, {{0, 1}}, ids, ids));
    CHECK_FALSE(verify_reduction_witness(d, {{0}, {1}}, ids, ids));

    const KaneyamaData sp = support::fixture_data("split_p2");
    CHECK(verify_reduction_witness(sp, torus_partition(2), ids, ids));

    const KaneyamaData p1p1 = tangent_p1p1();
    const std::vector<QMatrix> ids4(4, QMatrix::identity(2));
    CHECK(verify_reduction_witness(p1p1, {{0}, {1}}, ids4, ids4));

    std::vector<QMatrix> bad = ids;
    bad[0] = QMatrix{{1, 1}, {0, 1}};
    CHECK_FALSE(verify_reduction_witness(sp, torus_partition(2), ids, bad));
    CHECK_THROWS_AS(verify_reduction_witness(sp, torus_partition(2), ids, {}), DimensionMismatch);
  }
}
