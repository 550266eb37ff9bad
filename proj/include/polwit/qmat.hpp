#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

#include "polwit/error.hpp"

namespace polwit {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

// Detection arm of the photon pair. Arm A carries the major index of the
// joint basis |HH>,|HV>,|VH>,|VV>, i.e. amplitude index = 2a + b.
enum class Arm { A, B };

// Validation tolerances shared by every constructor below.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-9;

// Normalized single-photon polarization state, amplitudes ordered (H, V).
class PolarizationKet {
 public:
  explicit PolarizationKet(const Vec2& amp);

  const Vec2& amp() const { return amp_; }

  // <this|other>
  Complex overlap(const PolarizationKet& other) const {
    return amp_.dot(other.amp_);
  }

 private:
  Vec2 amp_;
};

// The six analyzer eigenstates: horizontal/vertical, diagonal/antidiagonal,
// left/right circular.
PolarizationKet ket_h();
PolarizationKet ket_v();
PolarizationKet ket_d();
PolarizationKet ket_f();
PolarizationKet ket_l();
PolarizationKet ket_r();

// Normalized joint state of the photon pair in the |HH>,|HV>,|VH>,|VV> basis.
class TwoQubitKet {
 public:
  explicit TwoQubitKet(const Vec4& amp);

  const Vec4& amp() const { return amp_; }

  Complex overlap(const TwoQubitKet& other) const {
    return amp_.dot(other.amp_);
  }

 private:
  Vec4 amp_;
};

// Unitary polarization action of a lossless element (waveplate or a
// composite of waveplates) on one arm.
class JonesMatrix {
 public:
  explicit JonesMatrix(const Mat2& u);

  static JonesMatrix identity() { return JonesMatrix(Mat2::Identity()); }

  const Mat2& u() const { return u_; }

  PolarizationKet apply(const PolarizationKet& k) const {
    return PolarizationKet(u_ * k.amp());
  }

  // Composite element: light traverses *this first, then next.
  JonesMatrix then(const JonesMatrix& next) const {
    return JonesMatrix(next.u_ * u_);
  }

  JonesMatrix adjoint() const { return JonesMatrix(Mat2(u_.adjoint())); }

 private:
  Mat2 u_;
};

// Two-photon mixed state: Hermitian, unit trace, positive semidefinite
// within kPositivityTol. Every construction path revalidates.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4& m);

  const Mat4& m() const { return m_; }

 private:
  Mat4 m_;
};

struct WeightedState {
  double weight;
  DensityMatrix state;
};

// |a> (x) |b>, amplitude[2i+j] = a[i]*b[j].
TwoQubitKet tensor(const PolarizationKet& a, const PolarizationKet& b);

// Rank-one projectors |k><k|.
DensityMatrix projector(const TwoQubitKet& k);
Mat2 projector(const PolarizationKet& k);

// Kronecker product of single-arm operators, arm A major.
Mat4 kron(const Mat2& a, const Mat2& b);

// Convex combination of states. Weights must be nonnegative and sum to one
// within kNormTol; an all-zero weight list is rejected, not renormalized.
DensityMatrix mix(std::span<const WeightedState> terms);
DensityMatrix mix(std::initializer_list<WeightedState> terms);

// (U_A (x) U_B) rho (U_A (x) U_B)^dag with the identity on the untouched arm.
DensityMatrix apply_local(const DensityMatrix& rho, Arm arm,
                          const JonesMatrix& u);

// Zeroes every off-diagonal element in the joint H/V basis; the diagonal is
// copied bit for bit.
DensityMatrix dephase_diagonal(const DensityMatrix& rho);

// Transposition of one arm's indices. The result stays Hermitian with unit
// trace but may have negative eigenvalues; hence the raw matrix return.
// Applying it twice restores the input bit for bit.
Mat4 partial_transpose(const Mat4& m, Arm arm);
Mat4 partial_transpose(const DensityMatrix& rho, Arm arm);

// Eigenvalues of a Hermitian 4x4 matrix, ascending. Rejects input whose
// Hermiticity residual exceeds kHermitianTol.
std::array<double, 4> eigenvalues_hermitian(const Mat4& m);

// Re Tr[observable * rho]. The observable must be Hermitian; an imaginary
// trace residue above 1e-10 is reported as an error.
double expectation(const Mat4& observable, const DensityMatrix& rho);

// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_residual(const Mat4& m);

}  // namespace polwit
