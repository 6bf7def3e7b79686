#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "gaugekit/liealg.hpp"
#include "gaugekit/rng.hpp"
#include "test_helpers.hpp"

using namespace gaugekit;
using testkit::mat_exp_series;

namespace {

Vec3 random_real_vec3(SplitMix64& rng) {
  return Vec3::real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                    rng.uniform(-1.0, 1.0));
}

}  // namespace

TEST_CASE("pauli matrices are hermitian, traceless and square to identity",
          "[liealg]") {
  for (int axis = 0; axis < 3; ++axis) {
    const Mat2 s = sigma(axis);
    CHECK((s - s.adjoint()).max_abs() == 0.0);
    CHECK(std::abs(s.trace()) == 0.0);
    CHECK((s * s - Mat2::identity()).max_abs() == 0.0);
  }
}

TEST_CASE("to_matrix maps basis vectors to the pauli matrices", "[liealg]") {
  CHECK(to_matrix(Vec3::real(0, 0, 0)).max_abs() == 0.0);
  CHECK((to_matrix(Vec3::real(0, 0, 1)) - sigma3()).max_abs() == 0.0);
  CHECK((to_matrix(Vec3::real(1, 0, 0)) - sigma1()).max_abs() == 0.0);
  CHECK((to_matrix(Vec3::real(0, 1, 0)) - sigma2()).max_abs() == 0.0);
}

TEST_CASE("pauli product identity matches explicit matrix arithmetic",
          "[liealg]") {
  SplitMix64 rng(101);
  for (int rep = 0; rep < 200; ++rep) {
    const Vec3 a = random_real_vec3(rng);
    const Vec3 b = random_real_vec3(rng);
    const PauliProduct p = pauli_compose(a, b);
    const Mat2 lhs = to_matrix(a) * to_matrix(b);
    const Mat2 rhs = p.scalar * Mat2::identity() + to_matrix(p.vector);
    CHECK((lhs - rhs).max_abs() <= 1e-12);
  }
}

TEST_CASE("cross product is antisymmetric and orthogonal to its arguments",
          "[liealg]") {
  SplitMix64 rng(102);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 a = random_real_vec3(rng);
    const Vec3 b = random_real_vec3(rng);
    CHECK((cross(a, b) + cross(b, a)).max_abs() <= 1e-15);
    CHECK(std::abs(dot(a, cross(a, b))) <= 1e-14);
    CHECK(std::abs(dot(b, cross(a, b))) <= 1e-14);
  }
}

TEST_CASE("from_matrix decomposes the identity and basis matrices", "[liealg]") {
  const MatDecomposition id = from_matrix(Mat2::identity());
  CHECK(std::abs(id.c0 - Complex(1.0, 0.0)) == 0.0);
  CHECK(id.c.max_abs() == 0.0);

  const MatDecomposition s2 = from_matrix(sigma2());
  CHECK(std::abs(s2.c0) == 0.0);
  CHECK((s2.c - Vec3::real(0, 1, 0)).max_abs() == 0.0);

  const MatDecomposition d = from_matrix(Mat2(2.0, 0.0, 0.0, 0.0));
  CHECK(std::abs(d.c0 - Complex(1.0, 0.0)) == 0.0);
  CHECK((d.c - Vec3::real(0, 0, 1)).max_abs() == 0.0);
}

TEST_CASE("from_matrix inverts to_matrix and reconstructs arbitrary matrices",
          "[liealg]") {
  SplitMix64 rng(103);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 v(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    const MatDecomposition d = from_matrix(to_matrix(v));
    CHECK(std::abs(d.c0) <= 1e-14);
    CHECK((d.c - v).max_abs() <= 1e-14);

    const Mat2 m(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    const MatDecomposition md = from_matrix(m);
    const Mat2 rebuilt = md.c0 * Mat2::identity() + to_matrix(md.c);
    CHECK((rebuilt - m).max_abs() <= 1e-14);
  }
}

TEST_CASE("matrix commutator basics", "[liealg]") {
  const Mat2 arbitrary(Complex(1, 2), Complex(3, -1), Complex(0, 4),
                       Complex(-2, 0.5));
  CHECK(mat_commutator(Mat2::identity(), arbitrary).max_abs() == 0.0);
  CHECK(mat_commutator(arbitrary, arbitrary).max_abs() == 0.0);

  const Mat2 expected = Complex(0.0, 2.0) * sigma3();
  CHECK((mat_commutator(sigma1(), sigma2()) - expected).max_abs() == 0.0);

  SplitMix64 rng(104);
  for (int rep = 0; rep < 50; ++rep) {
    const Mat2 a = to_matrix(random_real_vec3(rng));
    const Mat2 b = to_matrix(random_real_vec3(rng));
    const Mat2 sum = mat_commutator(a, b) + mat_commutator(b, a);
    CHECK(sum.max_abs() == 0.0);
  }
}

TEST_CASE("group exponential hits the closed-form landmark values", "[liealg]") {
  const double pi = std::numbers::pi;

  CHECK((exp_i_alpha_sigma(Vec3::real(0, 0, 0)).matrix() - Mat2::identity())
            .max_abs() == 0.0);

  const Mat2 at_pi = exp_i_alpha_sigma(Vec3::real(pi, 0, 0)).matrix();
  CHECK((at_pi + Mat2::identity()).max_abs() <= 1e-12);

  const Mat2 at_half_pi = exp_i_alpha_sigma(Vec3::real(pi / 2, 0, 0)).matrix();
  CHECK((at_half_pi - Complex(0.0, 1.0) * sigma1()).max_abs() <= 1e-12);
}

TEST_CASE("group exponential agrees with the truncated power series",
          "[liealg]") {
  SplitMix64 rng(105);
  const Complex i(0.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const double scale = rng.uniform(0.0, std::numbers::pi);
    Vec3 alpha = random_real_vec3(rng);
    const double n = alpha.max_abs();
    if (n > 0) alpha = (scale / n) * alpha;
    const Mat2 closed = exp_i_alpha_sigma(alpha).matrix();
    const Mat2 series = mat_exp_series(i * to_matrix(alpha));
    worst = std::max(worst, (closed - series).max_abs());
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("group exponential is smooth through zero angle", "[liealg]") {
  const Complex i(0.0, 1.0);
  for (const double t : {1e-3, 1e-5, 1e-7, 1e-12, 0.0}) {
    const Vec3 alpha = Vec3::real(t, -t, t / 2);
    const Mat2 closed = exp_i_alpha_sigma(alpha).matrix();
    const Mat2 series = mat_exp_series(i * to_matrix(alpha));
    CHECK((closed - series).max_abs() <= 1e-14);
  }
}

TEST_CASE("group exponential satisfies the group invariants", "[liealg]") {
  SplitMix64 rng(106);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 alpha = 3.0 * random_real_vec3(rng);
    const GroupElement s = exp_i_alpha_sigma(alpha);
    CHECK(special_unitary_defect(s.matrix()) <= 1e-12);
  }
}

TEST_CASE("group inverse is the adjoint and matches the negated exponent",
          "[liealg]") {
  CHECK((group_inverse(GroupElement::identity()).matrix() - Mat2::identity())
            .max_abs() == 0.0);

  SplitMix64 rng(107);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 alpha = 2.0 * random_real_vec3(rng);
    const GroupElement s = exp_i_alpha_sigma(alpha);
    const GroupElement sinv = group_inverse(s);
    CHECK((s.matrix() * sinv.matrix() - Mat2::identity()).max_abs() <= 1e-12);
    CHECK((sinv.matrix() - exp_i_alpha_sigma(-alpha).matrix()).max_abs()
          <= 1e-12);
    CHECK((sinv.matrix() - s.matrix().adjoint()).max_abs() == 0.0);
  }
}

TEST_CASE("group element construction projects small defects and rejects "
          "large ones", "[liealg]") {
  const GroupElement base = exp_i_alpha_sigma(Vec3::real(0.3, -0.7, 0.2));

  Mat2 nudged = base.matrix();
  nudged.at(0, 1) += Complex(1e-9, -1e-9);
  REQUIRE(special_unitary_defect(nudged) > GroupElement::kAcceptTol);
  const GroupElement projected(nudged);
  CHECK(special_unitary_defect(projected.matrix()) <= 1e-12);
  CHECK((projected.matrix() - base.matrix()).max_abs() <= 1e-8);

  Mat2 broken = base.matrix();
  broken.at(0, 0) += Complex(1e-3, 0.0);
  CHECK_THROWS_AS(GroupElement(broken), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement(2.0 * Mat2::identity()), std::invalid_argument);
}
