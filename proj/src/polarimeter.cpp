#include "polwit/polarimeter.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "polwit/rng.hpp"

namespace polwit {

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 4.0;
constexpr double kEighthTurn = std::numbers::pi / 8.0;

int basis_index(LocalBasis b) { return static_cast<int>(b); }

std::uint64_t setting_ordinal(const MeasurementSetting& s) {
  return static_cast<std::uint64_t>(3 * basis_index(s.basis_a) +
                                    basis_index(s.basis_b));
}

const char* basis_name(LocalBasis b) {
  switch (b) {
    case LocalBasis::linear: return "linear";
    case LocalBasis::diagonal: return "diagonal";
    case LocalBasis::circular: return "circular";
  }
  return "?";
}

void require_correlated(const CoincidenceRecord& record, LocalBasis expected) {
  if (record.setting.basis_a != expected ||
      record.setting.basis_b != expected) {
    std::ostringstream os;
    os << "expected a correlated " << basis_name(expected) << " record, got "
       << basis_name(record.setting.basis_a) << "/"
       << basis_name(record.setting.basis_b);
    throw Error(Errc::invalid_argument, os.str());
  }
  if (record.total == 0) {
    std::ostringstream os;
    os << "record for the " << basis_name(expected)
       << " setting has zero total counts";
    throw Error(Errc::zero_total, os.str());
  }
  std::uint64_t sum = 0;
  for (std::uint64_t c : record.counts) sum += c;
  if (sum != record.total) {
    throw Error(Errc::invalid_argument,
                "record counts do not sum to its total");
  }
}

// Channel coefficients of the witness: +1/2 on the (++) and (--) channels
// of the linear and diagonal settings, -1/2 on the (+-) and (-+) channels
// of the circular one.
std::array<double, 4> channel_coefficients(LocalBasis basis) {
  if (basis == LocalBasis::circular) return {0.0, -0.5, -0.5, 0.0};
  return {0.5, 0.0, 0.0, 0.5};
}

double variance_contribution(const CoincidenceRecord& record) {
  const std::array<double, 4> coeff = channel_coefficients(
      record.setting.basis_a);
  const double n = static_cast<double>(record.total);
  double first = 0.0;
  double mean = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double p = static_cast<double>(record.counts[i]) / n;
    first += coeff[i] * coeff[i] * p;
    mean += coeff[i] * p;
  }
  return (first - mean * mean) / n;
}

}  // namespace

JonesMatrix waveplate_jones(WaveplateKind kind, double angle) {
  if (!std::isfinite(angle)) {
    throw Error(Errc::invalid_argument, "waveplate angle must be finite");
  }
  Mat2 u;
  if (kind == WaveplateKind::half) {
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    u << c, s, s, -c;
  } else {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Complex off = Complex(1.0, -1.0) * s * c;
    u << Complex(c * c, s * s), off, off, Complex(s * s, c * c);
  }
  return JonesMatrix(u);
}

Mat2 analyzer_projector(const AnalyzerConfig& cfg) {
  const JonesMatrix chain =
      waveplate_jones(WaveplateKind::quarter, cfg.qwp_angle)
          .then(waveplate_jones(WaveplateKind::half, cfg.hwp_angle));
  const PolarizationKet port =
      cfg.port == PbsPort::transmit ? ket_h() : ket_v();
  return projector(chain.adjoint().apply(port));
}

AnalyzerConfig analyzer_table(LocalBasis basis, PbsPort port) {
  AnalyzerConfig cfg;
  cfg.port = port;
  switch (basis) {
    case LocalBasis::linear:
      break;
    case LocalBasis::diagonal:
      cfg.qwp_angle = kQuarterTurn;
      cfg.hwp_angle = kEighthTurn;
      break;
    case LocalBasis::circular:
      cfg.hwp_angle = -kEighthTurn;
      break;
  }
  return cfg;
}

std::pair<PolarizationKet, PolarizationKet> basis_kets(LocalBasis basis) {
  switch (basis) {
    case LocalBasis::linear: return {ket_h(), ket_v()};
    case LocalBasis::diagonal: return {ket_d(), ket_f()};
    case LocalBasis::circular: return {ket_l(), ket_r()};
  }
  throw Error(Errc::invalid_argument, "unknown basis");
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho,
                                            const MeasurementSetting& s) {
  const Mat2 plus_a = analyzer_projector(
      analyzer_table(s.basis_a, PbsPort::transmit));
  const Mat2 minus_a = analyzer_projector(
      analyzer_table(s.basis_a, PbsPort::reflect));
  const Mat2 plus_b = analyzer_projector(
      analyzer_table(s.basis_b, PbsPort::transmit));
  const Mat2 minus_b = analyzer_projector(
      analyzer_table(s.basis_b, PbsPort::reflect));

  const std::array<Mat4, 4> joint = {
      kron(plus_a, plus_b), kron(plus_a, minus_b), kron(minus_a, plus_b),
      kron(minus_a, minus_b)};

  std::array<double, 4> probs{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double p = (joint[i] * rho.m()).trace().real();
    if (p < -1e-10) {
      std::ostringstream os;
      os << "outcome probability " << p << " is negative beyond tolerance";
      throw Error(Errc::not_positive, os.str());
    }
    probs[i] = std::max(0.0, p);
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "outcome probabilities sum to " << sum << " instead of 1";
    throw Error(Errc::invalid_argument, os.str());
  }
  return probs;
}

CoincidenceRecord sample_counts(const DensityMatrix& rho,
                                const MeasurementSetting& s,
                                const SimulationConfig& cfg) {
  if (!std::isfinite(cfg.rate_cps) || cfg.rate_cps <= 0.0) {
    throw Error(Errc::invalid_argument, "coincidence rate must be positive");
  }
  if (!std::isfinite(cfg.duration_s) || cfg.duration_s <= 0.0) {
    throw Error(Errc::invalid_argument,
                "acquisition duration must be positive");
  }
  const std::array<double, 4> probs = outcome_probabilities(rho, s);
  const double mean_total = cfg.rate_cps * cfg.duration_s;

  Rng rng(derive_seed(cfg.seed, setting_ordinal(s)));
  CoincidenceRecord record;
  record.setting = s;
  for (int i = 0; i < 4; ++i) {
    record.counts[i] = rng.poisson(mean_total * probs[i]);
    record.total += record.counts[i];
  }
  return record;
}

WitnessEstimate estimate_witness(const CoincidenceRecord& linear,
                                 const CoincidenceRecord& diagonal,
                                 const CoincidenceRecord& circular) {
  require_correlated(linear, LocalBasis::linear);
  require_correlated(diagonal, LocalBasis::diagonal);
  require_correlated(circular, LocalBasis::circular);

  WitnessEstimate estimate;
  const double n_lin = static_cast<double>(linear.total);
  const double n_dia = static_cast<double>(diagonal.total);
  const double n_cir = static_cast<double>(circular.total);
  estimate.probabilities.hh = static_cast<double>(linear.counts[0]) / n_lin;
  estimate.probabilities.vv = static_cast<double>(linear.counts[3]) / n_lin;
  estimate.probabilities.dd = static_cast<double>(diagonal.counts[0]) / n_dia;
  estimate.probabilities.ff = static_cast<double>(diagonal.counts[3]) / n_dia;
  estimate.probabilities.lr = static_cast<double>(circular.counts[1]) / n_cir;
  estimate.probabilities.rl = static_cast<double>(circular.counts[2]) / n_cir;
  estimate.value = estimate.probabilities.reconstruct();

  const double variance = variance_contribution(linear) +
                          variance_contribution(diagonal) +
                          variance_contribution(circular);
  estimate.std_error = std::sqrt(variance);
  return estimate;
}

WitnessEstimate measure_witness(const DensityMatrix& rho,
                                const SimulationConfig& cfg) {
  const CoincidenceRecord linear = sample_counts(
      rho, MeasurementSetting::correlated(LocalBasis::linear), cfg);
  const CoincidenceRecord diagonal = sample_counts(
      rho, MeasurementSetting::correlated(LocalBasis::diagonal), cfg);
  const CoincidenceRecord circular = sample_counts(
      rho, MeasurementSetting::correlated(LocalBasis::circular), cfg);
  return estimate_witness(linear, diagonal, circular);
}

}  // namespace polwit
