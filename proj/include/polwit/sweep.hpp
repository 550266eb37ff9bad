#pragma once

#include <span>
#include <string>
#include <vector>

#include "polwit/polarimeter.hpp"

namespace polwit {

struct SweepConfig {
  std::vector<double> p_values;  // each in [0, 1]
  SimulationConfig simulation;
  bool analytic_only = false;
};

struct SweepRow {
  double p = 0.0;
  double w_est = 0.0;
  double w_err = 0.0;
  double w_analytic = 0.0;
  double ppt_min_eig = 0.0;
  bool entangled_ppt = false;
};

// One grid point of the Werner sweep: build werner(p), estimate the witness
// from the three simulated settings (seeded with
// derive_seed(sim.seed, point_index), so points are independent streams and
// may run concurrently), and take the partial-transpose verdict. With
// analytic_only the estimate columns carry the closed-form line and zero
// error instead of sampled values.
SweepRow sweep_point(double p, const SimulationConfig& sim,
                     std::uint64_t point_index, bool analytic_only);

// Rows in the order of cfg.p_values.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Plot-ready table: header `p,w_est,w_err,w_analytic,ppt_min_eig,entangled_ppt`
// then one comma-separated row per point, numbers at 12 significant digits,
// booleans as 0/1.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace polwit
