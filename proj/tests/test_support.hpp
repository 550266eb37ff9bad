#pragma once

#include <random>
#include <vector>

#include "polwit/qmat.hpp"

namespace polwit::test {

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Seed-reproducible generators for property tests. Random unitaries come
// from QR of a complex Gaussian matrix with the R diagonal phase fixed
// (Haar distributed); random spectra are uniform on the simplex (normalized
// exponentials); random states conjugate such a spectrum with such a
// unitary.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return unit_(gen_); }

  Complex gaussian() { return Complex(normal_(gen_), normal_(gen_)); }

  Eigen::MatrixXcd random_unitary(int n) {
    Eigen::MatrixXcd g(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) g(r, c) = gaussian();
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
      const Complex d = r(c, c);
      q.col(c) *= std::abs(d) == 0.0 ? 1.0 : d / std::abs(d);
    }
    return q;
  }

  std::vector<double> random_simplex(int n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(1.0 - unit_(gen_));
      sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
  }

  PolarizationKet random_polarization_ket() {
    Vec2 amp(gaussian(), gaussian());
    return PolarizationKet(amp / amp.norm());
  }

  TwoQubitKet random_two_qubit_ket() {
    Vec4 amp(gaussian(), gaussian(), gaussian(), gaussian());
    return TwoQubitKet(amp / amp.norm());
  }

  Mat2 random_qubit_density() {
    const std::vector<double> w = random_simplex(2);
    const Eigen::MatrixXcd u = random_unitary(2);
    Eigen::Vector2d d(w[0], w[1]);
    Mat2 m = u * d.asDiagonal() * u.adjoint();
    return Mat2(0.5 * (m + m.adjoint()));
  }

  DensityMatrix random_density() {
    const std::vector<double> w = random_simplex(4);
    const Eigen::MatrixXcd u = random_unitary(4);
    Eigen::Vector4d d(w[0], w[1], w[2], w[3]);
    Mat4 m = u * d.asDiagonal() * u.adjoint();
    return DensityMatrix(0.5 * (m + m.adjoint()));
  }

  // rho_A (x) rho_B with independent mixed single-qubit factors.
  DensityMatrix random_product_state() {
    return DensityMatrix(kron(random_qubit_density(), random_qubit_density()));
  }

  // Convex mixture of up to four random product states.
  DensityMatrix random_separable_mixture(int terms = 4) {
    const std::vector<double> w = random_simplex(terms);
    Mat4 acc = Mat4::Zero();
    for (int i = 0; i < terms; ++i) {
      acc += w[i] * kron(random_qubit_density(), random_qubit_density());
    }
    return DensityMatrix(acc);
  }

  JonesMatrix random_jones() {
    const Eigen::MatrixXcd u = random_unitary(2);
    return JonesMatrix(Mat2(u));
  }

  Mat4 random_hermitian(double scale = 1.0) {
    Mat4 g;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) g(r, c) = scale * gaussian();
    }
    return Mat4(0.5 * (g + g.adjoint()));
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace polwit::test
