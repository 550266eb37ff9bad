#include <doctest.h>

#include <cmath>

#include "polwit/states.hpp"
#include "polwit/witness.hpp"
#include "test_support.hpp"

using namespace polwit;
using test::max_abs_diff;
using test::StateSampler;

namespace {

// Sign-change locator for a decreasing function on [0, 1].
template <typename Fn>
double bisect_root(Fn&& f) {
  double lo = 0.0;
  double hi = 1.0;
  REQUIRE(f(lo) > 0.0);
  REQUIRE(f(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("witness operator has the expected explicit form") {
  const Mat4& w = witness_operator().m();
  Mat4 expected = Mat4::Zero();
  expected(0, 0) = expected(3, 3) = 0.5;
  expected(1, 2) = expected(2, 1) = 0.5;
  CHECK(max_abs_diff(w, expected) < 1e-14);
  CHECK(std::abs(w.trace().real() - 1.0) < 1e-14);

  // Equivalent closed form: identity/2 minus the singlet projector.
  CHECK(max_abs_diff(w, Mat4(0.5 * Mat4::Identity() -
                             projector(singlet()).m())) < 1e-14);

  const auto eigs = eigenvalues_hermitian(w);
  CHECK(std::abs(eigs[0] + 0.5) < 1e-14);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(eigs[i] - 0.5) < 1e-14);
}

TEST_CASE("witness operator type rejects invalid candidates") {
  CHECK_THROWS_AS(WitnessOperator{Mat4(Mat4::Identity() / 4.0)}, Error);
  Mat4 wrong_trace = witness_operator().m() * 2.0;
  CHECK_THROWS_AS(WitnessOperator{wrong_trace}, Error);
}

TEST_CASE("witness expectation on the werner family") {
  CHECK(std::abs(witness_expectation(werner(1.0)) + 0.5) < 1e-14);
  CHECK(std::abs(witness_expectation(werner(0.0)) - 0.25) < 1e-14);
  CHECK(std::abs(witness_expectation(werner(1.0 / 3.0))) < 1e-14);
}

TEST_CASE("analytic witness formula") {
  CHECK(witness_analytic_werner(1.0) == -0.5);
  CHECK(witness_analytic_werner(0.0) == 0.25);
  CHECK(witness_analytic_werner(0.5) == -0.125);
  CHECK_THROWS_AS(witness_analytic_werner(-0.2), Error);
  CHECK_THROWS_AS(witness_analytic_werner(1.2), Error);
}

TEST_CASE("witness matches the analytic line across the grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = static_cast<double>(i) / 1000.0;
    CHECK(std::abs(witness_expectation(werner(p)) -
                   witness_analytic_werner(p)) < 1e-12);
  }
}

TEST_CASE("witness decomposition probabilities") {
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    const ProjectorProbabilities probs = witness_decomposition(werner(p));
    const double same = (1.0 - p) / 4.0;
    const double cross = p / 2.0 + (1.0 - p) / 4.0;
    CHECK(std::abs(probs.hh - same) < 1e-14);
    CHECK(std::abs(probs.vv - same) < 1e-14);
    CHECK(std::abs(probs.dd - same) < 1e-14);
    CHECK(std::abs(probs.ff - same) < 1e-14);
    CHECK(std::abs(probs.lr - cross) < 1e-14);
    CHECK(std::abs(probs.rl - cross) < 1e-14);
  }

  const ProjectorProbabilities chaotic_probs = witness_decomposition(chaotic());
  for (double v : {chaotic_probs.hh, chaotic_probs.vv, chaotic_probs.dd,
                   chaotic_probs.ff, chaotic_probs.lr, chaotic_probs.rl}) {
    CHECK(std::abs(v - 0.25) < 1e-15);
  }
}

TEST_CASE("decomposition reconstructs the expectation on random states") {
  StateSampler sampler(31);
  for (int i = 0; i < 10000; ++i) {
    const DensityMatrix rho = sampler.random_density();
    const ProjectorProbabilities probs = witness_decomposition(rho);
    for (double v : {probs.hh, probs.vv, probs.dd, probs.ff, probs.lr,
                     probs.rl}) {
      CHECK(v > -1e-12);
      CHECK(v < 1.0 + 1e-12);
    }
    CHECK(std::abs(probs.reconstruct() - witness_expectation(rho)) < 1e-12);
  }
}

TEST_CASE("ppt verdicts on the werner family and product states") {
  const PptResult half = ppt_check(werner(0.5));
  CHECK(std::abs(half.min_eigenvalue + 0.125) < 1e-12);
  CHECK(half.entangled);

  const PptResult boundary = ppt_check(werner(1.0 / 3.0));
  CHECK(std::abs(boundary.min_eigenvalue) < 1e-12);
  CHECK_FALSE(boundary.entangled);

  StateSampler sampler(32);
  for (int i = 0; i < 1000; ++i) {
    const PptResult product = ppt_check(sampler.random_product_state());
    CHECK(product.min_eigenvalue >= -1e-10);
    CHECK_FALSE(product.entangled);
  }
}

TEST_CASE("ppt verdict does not depend on the transposed arm") {
  StateSampler sampler(33);
  for (int i = 0; i < 2000; ++i) {
    const DensityMatrix rho = sampler.random_density();
    const PptResult a = ppt_check(rho, Arm::A);
    const PptResult b = ppt_check(rho, Arm::B);
    CHECK(a.entangled == b.entangled);
    CHECK(std::abs(a.min_eigenvalue - b.min_eigenvalue) < 1e-10);
  }
}

TEST_CASE("verdict aggregation") {
  const EntanglementVerdict deep = is_witnessed_entangled(werner(0.9));
  CHECK(deep.witnessed);
  CHECK(deep.ppt_entangled);
  CHECK(deep.witnessed == (deep.witness_value < 0.0));

  const EntanglementVerdict shallow = is_witnessed_entangled(werner(0.2));
  CHECK_FALSE(shallow.witnessed);
  CHECK_FALSE(shallow.ppt_entangled);

  // This witness is tailored to singlet-weighted states: the phi=0 Bell
  // state is entangled by PPT yet invisible to it.
  const EntanglementVerdict phi_plus =
      is_witnessed_entangled(projector(bell_phi(0.0)));
  CHECK_FALSE(phi_plus.witnessed);
  CHECK(std::abs(phi_plus.witness_value - 0.5) < 1e-14);
  CHECK(phi_plus.ppt_entangled);
  CHECK(std::abs(phi_plus.ppt_min_eigenvalue + 0.5) < 1e-12);
}

TEST_CASE("witness is nonnegative on separable states") {
  StateSampler sampler(34);
  for (int i = 0; i < 10000; ++i) {
    CHECK(witness_expectation(sampler.random_product_state()) >= -1e-10);
  }
  for (int i = 0; i < 10000; ++i) {
    CHECK(witness_expectation(sampler.random_separable_mixture()) >= -1e-10);
  }
}

TEST_CASE("witness and ppt agree in sign across the werner grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = static_cast<double>(i) / 1000.0;
    const double w = witness_expectation(werner(p));
    const double eig = ppt_check(werner(p)).min_eigenvalue;
    CHECK(std::abs(w - eig) < 1e-12);  // same line (1-3p)/4 for this family
    if (std::abs(p - 1.0 / 3.0) > 1e-9) {
      CHECK((w < 0.0) == (eig < 0.0));
    }
  }
}

TEST_CASE("both detectors cross zero at p = 1/3") {
  const double witness_root =
      bisect_root([](double p) { return witness_expectation(werner(p)); });
  CHECK(std::abs(witness_root - 1.0 / 3.0) < 1e-12);

  const double ppt_root =
      bisect_root([](double p) { return ppt_check(werner(p)).min_eigenvalue; });
  CHECK(std::abs(ppt_root - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("concurrence on the werner family") {
  CHECK(std::abs(concurrence(werner(1.0)) - 1.0) < 1e-10);
  CHECK(std::abs(concurrence(werner(2.0 / 3.0)) - 0.5) < 1e-10);
  for (double p : {0.0, 0.1, 0.2, 1.0 / 3.0}) {
    CHECK(concurrence(werner(p)) < 1e-10);
  }
  for (int i = 0; i <= 1000; ++i) {
    const double p = static_cast<double>(i) / 1000.0;
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(std::abs(concurrence(werner(p)) - expected) < 1e-10);
  }
}

TEST_CASE("concurrence and ppt agree on random states") {
  StateSampler sampler(35);
  for (int i = 0; i < 10000; ++i) {
    const DensityMatrix rho = sampler.random_density();
    const bool by_concurrence = concurrence(rho) > kEntanglementTol;
    const bool by_ppt = ppt_check(rho).entangled;
    CHECK(by_concurrence == by_ppt);
  }
}
