#include "polwit/qmat.hpp"

#include <cmath>
#include <sstream>

namespace polwit {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void require_finite(const auto& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(Errc::non_finite,
                std::string(what) + " contains a non-finite component");
  }
}

std::string format_residual(const char* what, double residual, double tol) {
  std::ostringstream os;
  os << what << " residual " << residual << " exceeds tolerance " << tol;
  return os.str();
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::non_finite: return "non_finite";
    case Errc::not_normalized: return "not_normalized";
    case Errc::not_unitary: return "not_unitary";
    case Errc::not_hermitian: return "not_hermitian";
    case Errc::bad_trace: return "bad_trace";
    case Errc::not_positive: return "not_positive";
    case Errc::parse: return "parse";
    case Errc::zero_total: return "zero_total";
  }
  return "unknown";
}

PolarizationKet::PolarizationKet(const Vec2& amp) : amp_(amp) {
  require_finite(amp_, "polarization ket");
  const double residual = std::abs(amp_.norm() - 1.0);
  if (residual > kNormTol) {
    throw Error(Errc::not_normalized,
                format_residual("polarization ket norm", residual, kNormTol));
  }
}

PolarizationKet ket_h() { return PolarizationKet(Vec2(1.0, 0.0)); }
PolarizationKet ket_v() { return PolarizationKet(Vec2(0.0, 1.0)); }
PolarizationKet ket_d() {
  return PolarizationKet(Vec2(kInvSqrt2, kInvSqrt2));
}
PolarizationKet ket_f() {
  return PolarizationKet(Vec2(kInvSqrt2, -kInvSqrt2));
}
PolarizationKet ket_l() {
  return PolarizationKet(Vec2(kInvSqrt2, Complex(0.0, kInvSqrt2)));
}
PolarizationKet ket_r() {
  return PolarizationKet(Vec2(kInvSqrt2, Complex(0.0, -kInvSqrt2)));
}

TwoQubitKet::TwoQubitKet(const Vec4& amp) : amp_(amp) {
  require_finite(amp_, "two-qubit ket");
  const double residual = std::abs(amp_.norm() - 1.0);
  if (residual > kNormTol) {
    throw Error(Errc::not_normalized,
                format_residual("two-qubit ket norm", residual, kNormTol));
  }
}

JonesMatrix::JonesMatrix(const Mat2& u) : u_(u) {
  require_finite(u_, "Jones matrix");
  const double residual =
      (u_ * u_.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (residual > kUnitaryTol) {
    throw Error(Errc::not_unitary,
                format_residual("Jones matrix unitarity", residual,
                                kUnitaryTol));
  }
}

double hermiticity_residual(const Mat4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
  require_finite(m_, "density matrix");
  const double herm = hermiticity_residual(m_);
  if (herm > kHermitianTol) {
    throw Error(Errc::not_hermitian,
                format_residual("density matrix Hermiticity", herm,
                                kHermitianTol));
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace must be 1 within " << kTraceTol << ", got "
       << tr.real();
    if (tr.imag() != 0.0) os << (tr.imag() < 0 ? "" : "+") << tr.imag() << "i";
    throw Error(Errc::bad_trace, os.str());
  }
  const double min_eig = eigenvalues_hermitian(m_)[0];
  if (min_eig < -kPositivityTol) {
    std::ostringstream os;
    os << "density matrix minimum eigenvalue " << min_eig << " is below -"
       << kPositivityTol;
    throw Error(Errc::not_positive, os.str());
  }
}

TwoQubitKet tensor(const PolarizationKet& a, const PolarizationKet& b) {
  Vec4 amp;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      amp(2 * i + j) = a.amp()(i) * b.amp()(j);
    }
  }
  return TwoQubitKet(amp);
}

DensityMatrix projector(const TwoQubitKet& k) {
  return DensityMatrix(k.amp() * k.amp().adjoint());
}

Mat2 projector(const PolarizationKet& k) {
  return k.amp() * k.amp().adjoint();
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix mix(std::span<const WeightedState> terms) {
  if (terms.empty()) {
    throw Error(Errc::invalid_argument, "mix requires at least one state");
  }
  double weight_sum = 0.0;
  Mat4 acc = Mat4::Zero();
  for (const WeightedState& term : terms) {
    if (!std::isfinite(term.weight) || term.weight < 0.0) {
      std::ostringstream os;
      os << "mix weight must be nonnegative, got " << term.weight;
      throw Error(Errc::invalid_argument, os.str());
    }
    weight_sum += term.weight;
    acc += term.weight * term.state.m();
  }
  if (std::abs(weight_sum - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "mix weights must sum to 1 within " << kNormTol << ", got "
       << weight_sum;
    throw Error(Errc::invalid_argument, os.str());
  }
  return DensityMatrix(acc);
}

DensityMatrix mix(std::initializer_list<WeightedState> terms) {
  return mix(std::span<const WeightedState>(terms.begin(), terms.size()));
}

DensityMatrix apply_local(const DensityMatrix& rho, Arm arm,
                          const JonesMatrix& u) {
  const Mat4 joint = arm == Arm::A ? kron(u.u(), Mat2::Identity())
                                   : kron(Mat2::Identity(), u.u());
  return DensityMatrix(joint * rho.m() * joint.adjoint());
}

DensityMatrix dephase_diagonal(const DensityMatrix& rho) {
  Mat4 out = Mat4::Zero();
  out.diagonal() = rho.m().diagonal();
  return DensityMatrix(out);
}

Mat4 partial_transpose(const Mat4& in, Arm arm) {
  Mat4 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int ap = 0; ap < 2; ++ap) {
        for (int bp = 0; bp < 2; ++bp) {
          if (arm == Arm::B) {
            // (ab, a'b') <- (ab', a'b)
            out(2 * a + b, 2 * ap + bp) = in(2 * a + bp, 2 * ap + b);
          } else {
            out(2 * a + b, 2 * ap + bp) = in(2 * ap + b, 2 * a + bp);
          }
        }
      }
    }
  }
  return out;
}

Mat4 partial_transpose(const DensityMatrix& rho, Arm arm) {
  return partial_transpose(rho.m(), arm);
}

std::array<double, 4> eigenvalues_hermitian(const Mat4& m) {
  require_finite(m, "matrix");
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    throw Error(Errc::not_hermitian,
                format_residual("eigensolver input Hermiticity", herm,
                                kHermitianTol));
  }
  Eigen::SelfAdjointEigenSolver<Mat4> solver;
  solver.compute(m, Eigen::EigenvaluesOnly);
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

double expectation(const Mat4& observable, const DensityMatrix& rho) {
  require_finite(observable, "observable");
  const double herm = hermiticity_residual(observable);
  if (herm > kHermitianTol) {
    throw Error(Errc::not_hermitian,
                format_residual("observable Hermiticity", herm,
                                kHermitianTol));
  }
  const Complex tr = (observable * rho.m()).trace();
  if (std::abs(tr.imag()) >= 1e-10) {
    std::ostringstream os;
    os << "expectation value has imaginary residue " << tr.imag();
    throw Error(Errc::invalid_argument, os.str());
  }
  return tr.real();
}

}  // namespace polwit
