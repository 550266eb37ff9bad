#include "polwit/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace polwit {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void require_unit_interval(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << value;
    throw Error(Errc::invalid_argument, os.str());
  }
}

// Half-wave plate with its fast axis at 45 degrees: swaps H and V.
JonesMatrix hwp_at_45() {
  Mat2 x;
  x << 0.0, 1.0, 1.0, 0.0;
  return JonesMatrix(x);
}

}  // namespace

SectorPartition::SectorPartition(double singlet_fraction, double b_fraction,
                                 double c_fraction)
    : singlet_fraction_(singlet_fraction),
      b_fraction_(b_fraction),
      c_fraction_(c_fraction) {
  require_unit_interval(singlet_fraction_, "singlet fraction");
  require_unit_interval(b_fraction_, "sector B fraction");
  require_unit_interval(c_fraction_, "sector C fraction");
  const double sum = singlet_fraction_ + b_fraction_ + c_fraction_;
  if (std::abs(sum - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "sector fractions must sum to 1 within " << kNormTol << ", got "
       << sum;
    throw Error(Errc::invalid_argument, os.str());
  }
  if (std::abs(b_fraction_ - c_fraction_) > kNormTol) {
    std::ostringstream os;
    os << "sectors B and C must be balanced, got " << b_fraction_ << " and "
       << c_fraction_;
    throw Error(Errc::invalid_argument, os.str());
  }
}

SectorPartition SectorPartition::balanced(double singlet_fraction) {
  require_unit_interval(singlet_fraction, "singlet fraction");
  const double rest = (1.0 - singlet_fraction) / 2.0;
  return SectorPartition(singlet_fraction, rest, rest);
}

TwoQubitKet singlet() {
  return TwoQubitKet(Vec4(0.0, kInvSqrt2, -kInvSqrt2, 0.0));
}

TwoQubitKet bell_phi(double phase) {
  if (!std::isfinite(phase)) {
    throw Error(Errc::invalid_argument, "Bell phase must be finite");
  }
  Vec4 amp = Vec4::Zero();
  amp(0) = kInvSqrt2;
  amp(3) = kInvSqrt2 * std::polar(1.0, phase);
  return TwoQubitKet(amp);
}

DensityMatrix chaotic() {
  return DensityMatrix(Mat4::Identity() / 4.0);
}

DensityMatrix werner(double p) {
  require_unit_interval(p, "Werner weight p");
  return mix({{p, projector(singlet())}, {1.0 - p, chaotic()}});
}

DensityMatrix patchwork_pipeline(const SectorPartition& partition) {
  const JonesMatrix flip = hwp_at_45();

  // All sectors leave the source as the phase-pi Bell state and pass the
  // waveplate in front of detector B, which produces the singlet.
  const DensityMatrix after_flip_b =
      apply_local(projector(bell_phi(std::numbers::pi)), Arm::B, flip);

  const DensityMatrix sector_a = after_flip_b;
  const DensityMatrix sector_b = dephase_diagonal(after_flip_b);
  const DensityMatrix sector_c = apply_local(sector_b, Arm::A, flip);

  return mix({{partition.singlet_fraction(), sector_a},
              {partition.b_fraction(), sector_b},
              {partition.c_fraction(), sector_c}});
}

}  // namespace polwit
