#include "polwit/sweep.hpp"

#include <cstdio>

#include "polwit/rng.hpp"
#include "polwit/states.hpp"

namespace polwit {

namespace {

void append_number(std::string& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  out += buf;
}

}  // namespace

SweepRow sweep_point(double p, const SimulationConfig& sim,
                     std::uint64_t point_index, bool analytic_only) {
  const DensityMatrix rho = werner(p);

  SweepRow row;
  row.p = p;
  row.w_analytic = witness_analytic_werner(p);
  const PptResult ppt = ppt_check(rho);
  row.ppt_min_eig = ppt.min_eigenvalue;
  row.entangled_ppt = ppt.entangled;

  if (analytic_only) {
    row.w_est = row.w_analytic;
    row.w_err = 0.0;
  } else {
    SimulationConfig point_sim = sim;
    point_sim.seed = derive_seed(sim.seed, point_index);
    const WitnessEstimate estimate = measure_witness(rho, point_sim);
    row.w_est = estimate.value;
    row.w_err = estimate.std_error;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.p_values.empty()) {
    throw Error(Errc::invalid_argument, "sweep grid must be nonempty");
  }
  std::vector<SweepRow> rows;
  rows.reserve(cfg.p_values.size());
  for (std::size_t i = 0; i < cfg.p_values.size(); ++i) {
    rows.push_back(sweep_point(cfg.p_values[i], cfg.simulation,
                               static_cast<std::uint64_t>(i),
                               cfg.analytic_only));
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "p,w_est,w_err,w_analytic,ppt_min_eig,entangled_ppt\n";
  for (const SweepRow& row : rows) {
    append_number(out, row.p);
    out += ',';
    append_number(out, row.w_est);
    out += ',';
    append_number(out, row.w_err);
    out += ',';
    append_number(out, row.w_analytic);
    out += ',';
    append_number(out, row.ppt_min_eig);
    out += ',';
    out += row.entangled_ppt ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace polwit
