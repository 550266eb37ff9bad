#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polwit/states.hpp"
#include "polwit/witness.hpp"
#include "test_support.hpp"

using namespace polwit;
using test::max_abs_diff;

TEST_CASE("singlet amplitudes") {
  const Vec4 amp = singlet().amp();
  CHECK(std::abs(amp(0)) == 0.0);
  CHECK(std::abs(amp(1) - 0.7071067811865476) < 1e-15);
  CHECK(std::abs(amp(2) + 0.7071067811865476) < 1e-15);
  CHECK(std::abs(amp(3)) == 0.0);
  CHECK(std::abs(amp.norm() - 1.0) < 1e-15);
  CHECK(std::abs(std::norm(amp(1)) - 0.5) < 1e-15);  // |<HV|psi->|^2
}

TEST_CASE("bell_phi endpoints and orthogonality to the singlet") {
  const Vec4 plus = bell_phi(0.0).amp();
  CHECK(std::abs(plus(0) - 0.7071067811865476) < 1e-15);
  CHECK(std::abs(plus(3) - 0.7071067811865476) < 1e-15);
  CHECK(std::abs(plus(1)) + std::abs(plus(2)) == 0.0);

  const Vec4 minus = bell_phi(std::numbers::pi).amp();
  CHECK(std::abs(minus(3) + 0.7071067811865476) < 1e-12);

  for (double phi : {0.0, 0.5, 1.0, 2.5, 6.28}) {
    CHECK(std::abs(bell_phi(phi).overlap(singlet())) == 0.0);
  }
  CHECK_THROWS_AS(bell_phi(std::nan("")), Error);
}

TEST_CASE("chaotic state") {
  CHECK(max_abs_diff(chaotic().m(), Mat4(Mat4::Identity() / 4.0)) == 0.0);
  CHECK(std::abs(witness_expectation(chaotic()) - 0.25) < 1e-15);
  for (double v : eigenvalues_hermitian(chaotic().m())) {
    CHECK(std::abs(v - 0.25) < 1e-15);
  }
}

TEST_CASE("werner family entries and endpoints") {
  CHECK(max_abs_diff(werner(0.0).m(), chaotic().m()) < 1e-15);
  CHECK(max_abs_diff(werner(1.0).m(), projector(singlet()).m()) < 1e-15);

  const Mat4 half = werner(0.5).m();
  Mat4 want = Mat4::Zero();
  want(0, 0) = want(3, 3) = 0.125;
  want(1, 1) = want(2, 2) = 0.375;
  want(1, 2) = want(2, 1) = -0.25;
  CHECK(max_abs_diff(half, want) < 1e-15);

  CHECK_THROWS_AS(werner(-0.01), Error);
  CHECK_THROWS_AS(werner(1.01), Error);
  CHECK_THROWS_AS(werner(std::nan("")), Error);
}

TEST_CASE("werner states are valid across the grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = static_cast<double>(i) / 1000.0;
    const DensityMatrix rho = werner(p);  // constructor validates
    CHECK(std::abs(rho.m()(1, 2).real() + p / 2.0) < 1e-15);
  }
}

TEST_CASE("werner is affine in p") {
  for (double alpha : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    const double p1 = 0.15;
    const double p2 = 0.85;
    const Mat4 lhs = werner(alpha * p1 + (1.0 - alpha) * p2).m();
    const Mat4 rhs = alpha * werner(p1).m() + (1.0 - alpha) * werner(p2).m();
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("sector partition validation") {
  CHECK_NOTHROW(SectorPartition(0.6, 0.2, 0.2));
  CHECK_THROWS_AS(SectorPartition(0.6, 0.3, 0.1), Error);   // unbalanced
  CHECK_THROWS_AS(SectorPartition(0.6, 0.25, 0.25), Error); // sum != 1
  CHECK_THROWS_AS(SectorPartition(-0.2, 0.6, 0.6), Error);
  const SectorPartition balanced = SectorPartition::balanced(0.3);
  CHECK(balanced.b_fraction() == balanced.c_fraction());
  CHECK(std::abs(balanced.singlet_fraction() + balanced.b_fraction() +
                 balanced.c_fraction() - 1.0) < 1e-15);
}

TEST_CASE("patchwork pipeline endpoints") {
  CHECK(max_abs_diff(
            patchwork_pipeline(SectorPartition(1.0, 0.0, 0.0)).m(),
            projector(singlet()).m()) < 1e-15);
  CHECK(max_abs_diff(
            patchwork_pipeline(SectorPartition(0.0, 0.5, 0.5)).m(),
            Mat4(Mat4::Identity() / 4.0)) < 1e-15);
  CHECK(max_abs_diff(patchwork_pipeline(SectorPartition(0.6, 0.2, 0.2)).m(),
                     werner(0.6).m()) < 1e-12);
}

TEST_CASE("patchwork pipeline equals the analytic werner family") {
  for (int i = 0; i <= 10; ++i) {
    const double f = static_cast<double>(i) / 10.0;
    CHECK(max_abs_diff(patchwork_pipeline(SectorPartition::balanced(f)).m(),
                       werner(f).m()) < 1e-12);
  }
}

TEST_CASE("sector states after each pipeline step") {
  // Recompose the pipeline from the public primitives and check the
  // intermediate sector states.
  Mat2 x;
  x << 0.0, 1.0, 1.0, 0.0;
  const JonesMatrix flip(x);

  const DensityMatrix sector_a =
      apply_local(projector(bell_phi(std::numbers::pi)), Arm::B, flip);
  CHECK(max_abs_diff(sector_a.m(), projector(singlet()).m()) < 1e-15);

  const DensityMatrix sector_b = dephase_diagonal(sector_a);
  Mat4 want_b = Mat4::Zero();
  want_b(1, 1) = want_b(2, 2) = 0.5;
  CHECK(max_abs_diff(sector_b.m(), want_b) < 1e-15);

  const DensityMatrix sector_c = apply_local(sector_b, Arm::A, flip);
  Mat4 want_c = Mat4::Zero();
  want_c(0, 0) = want_c(3, 3) = 0.5;
  CHECK(max_abs_diff(sector_c.m(), want_c) < 1e-15);

  // Equal-weight mixture of B and C is the four-projector mixture.
  const DensityMatrix bc = mix({{0.5, sector_b}, {0.5, sector_c}});
  CHECK(max_abs_diff(bc.m(), Mat4(Mat4::Identity() / 4.0)) < 1e-15);
}
