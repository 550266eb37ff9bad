#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "polwit/qmat.hpp"
#include "polwit/witness.hpp"

namespace polwit {

// Measurement basis of one analyzer: linear (H/V), diagonal (D/F) or
// circular (L/R). The first outcome of each pair is the "+" channel.
enum class LocalBasis { linear, diagonal, circular };

inline constexpr std::array<LocalBasis, 3> kAllBases = {
    LocalBasis::linear, LocalBasis::diagonal, LocalBasis::circular};

struct MeasurementSetting {
  LocalBasis basis_a;
  LocalBasis basis_b;

  // Same basis on both arms, as the witness protocol requires.
  static MeasurementSetting correlated(LocalBasis b) { return {b, b}; }
};

enum class PbsPort { transmit, reflect };

// Waveplate pair in front of the polarizing beam splitter of one arm.
struct AnalyzerConfig {
  double qwp_angle = 0.0;
  double hwp_angle = 0.0;
  PbsPort port = PbsPort::transmit;
};

struct SimulationConfig {
  double rate_cps = 4000.0;
  double duration_s = 30.0;
  std::uint64_t seed = 0;
};

// Four-channel coincidence counts for one setting, channels ordered
// (++, +-, -+, --).
struct CoincidenceRecord {
  MeasurementSetting setting;
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t total = 0;
};

struct WitnessEstimate {
  double value = 0.0;
  double std_error = 0.0;
  ProjectorProbabilities probabilities;
};

enum class WaveplateKind { half, quarter };

// Jones matrix of a retarder with its fast axis at `angle` from horizontal,
// global phase dropped:
//   half:    [[cos 2t,  sin 2t], [sin 2t, -cos 2t]]
//   quarter: [[cos^2 t + i sin^2 t, (1-i) sin t cos t],
//             [(1-i) sin t cos t,   sin^2 t + i cos^2 t]]
JonesMatrix waveplate_jones(WaveplateKind kind, double angle);

// Rank-one projector measured by a QWP -> HWP -> PBS chain; the analyzer
// ket is (HWP * QWP)^dag applied to the port ket (transmit = H, reflect = V).
Mat2 analyzer_projector(const AnalyzerConfig& cfg);

// Waveplate angles that point the analyzer at the outcomes of `basis`:
//   linear   qwp 0     hwp 0      transmit H, reflect V
//   diagonal qwp pi/4  hwp pi/8   transmit D, reflect F
//   circular qwp 0     hwp -pi/8  transmit L, reflect R
AnalyzerConfig analyzer_table(LocalBasis basis, PbsPort port);

// Orthonormal outcome pair of a basis, first outcome first.
std::pair<PolarizationKet, PolarizationKet> basis_kets(LocalBasis basis);

// Joint outcome probabilities Tr[(P_i (x) P_j) rho] with both arms modeled
// through their analyzer chains; nonnegative, summing to one.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho,
                                            const MeasurementSetting& s);

// One acquisition: channel counts are independent Poisson draws with means
// rate*duration*p_i, so the total is Poisson(rate*duration) and the split
// is multinomial given the total. The stream seed is
// derive_seed(cfg.seed, 3*basis_a + basis_b); identical inputs give
// identical records.
CoincidenceRecord sample_counts(const DensityMatrix& rho,
                                const MeasurementSetting& s,
                                const SimulationConfig& cfg);

// Plug-in witness estimate from the three correlated records. The variance
// sums, per setting, (sum_i c_i^2 p_i - (sum_i c_i p_i)^2) / N with
// c_i in {+1/2, -1/2, 0} the channel coefficients, i.e. the full
// multinomial covariance within each setting.
WitnessEstimate estimate_witness(const CoincidenceRecord& linear,
                                 const CoincidenceRecord& diagonal,
                                 const CoincidenceRecord& circular);

// Samples the three correlated settings and folds them into an estimate.
WitnessEstimate measure_witness(const DensityMatrix& rho,
                                const SimulationConfig& cfg);

}  // namespace polwit
