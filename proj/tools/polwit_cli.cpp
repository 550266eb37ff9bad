// polwit command line: Werner sweeps, single-state analysis, and state
// document generation, all through the shared-library C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polwit.h"

namespace {

int fail_with(polwit_status status, const std::string& context) {
  std::cerr << "error: " << context << ": "
            << polwit_status_name(status) << ": " << polwit_last_error()
            << "\n";
  return static_cast<int>(status);
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  file << text;
  return file.good() ? 0 : 1;
}

int emit_state(polwit_state* state, const std::string& out_path) {
  size_t len = 0;
  polwit_status status = polwit_state_serialize(state, nullptr, 0, &len);
  std::string text;
  if (status == POLWIT_ERR_BUFFER_TOO_SMALL) {
    text.resize(len);
    status = polwit_state_serialize(state, text.data(), text.size(), &len);
    text.resize(len);
  }
  polwit_state_free(state);
  if (status != POLWIT_OK) return fail_with(status, "serialize");
  return write_output(text, out_path);
}

struct SweepOptions {
  int steps = 11;
  double p_min = 0.0;
  double p_max = 1.0;
  double rate = 4000.0;
  double duration = 30.0;
  std::uint64_t seed = 0;
  bool analytic_only = false;
  std::string out_path;
};

int run_sweep(const SweepOptions& opt) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(opt.steps));
  for (int i = 0; i < opt.steps; ++i) {
    grid.push_back(opt.steps == 1 ? opt.p_min
                                  : opt.p_min + (opt.p_max - opt.p_min) *
                                                    static_cast<double>(i) /
                                                    (opt.steps - 1));
  }

  size_t len = 0;
  polwit_status status =
      polwit_sweep_csv(grid.data(), grid.size(), opt.rate, opt.duration,
                       opt.seed, opt.analytic_only ? 1 : 0, nullptr, 0, &len);
  std::string csv;
  if (status == POLWIT_ERR_BUFFER_TOO_SMALL) {
    csv.resize(len);
    status = polwit_sweep_csv(grid.data(), grid.size(), opt.rate,
                              opt.duration, opt.seed,
                              opt.analytic_only ? 1 : 0, csv.data(),
                              csv.size(), &len);
    csv.resize(len);
  }
  if (status != POLWIT_OK) return fail_with(status, "sweep");
  return write_output(csv, opt.out_path);
}

int run_witness(const std::string& state_path) {
  std::ifstream file(state_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read '" << state_path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const std::string document = buffer.str();

  polwit_state* state = nullptr;
  if (polwit_status status = polwit_state_parse(document.c_str(), &state)) {
    return fail_with(status, state_path);
  }
  polwit_verdict verdict;
  const polwit_status status = polwit_analyze(state, &verdict);
  polwit_state_free(state);
  if (status != POLWIT_OK) return fail_with(status, "analyze");

  std::cout << "witness_value: " << format_number(verdict.witness_value)
            << "\n"
            << "ppt_min_eigenvalue: "
            << format_number(verdict.ppt_min_eigenvalue) << "\n"
            << "concurrence: " << format_number(verdict.concurrence) << "\n"
            << "witnessed: " << (verdict.witnessed ? "true" : "false") << "\n"
            << "ppt_entangled: "
            << (verdict.ppt_entangled ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon polarization entanglement witness toolkit"};
  app.require_subcommand(1);

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Simulate the witness across a grid of Werner states");
  sweep->add_option("--steps", sweep_opt.steps, "Number of grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--p-min", sweep_opt.p_min, "Smallest singlet weight")
      ->capture_default_str();
  sweep->add_option("--p-max", sweep_opt.p_max, "Largest singlet weight")
      ->capture_default_str();
  sweep->add_option("--rate", sweep_opt.rate, "Coincidences per second")
      ->capture_default_str();
  sweep->add_option("--duration", sweep_opt.duration,
                    "Acquisition seconds per setting")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_opt.seed, "Master RNG seed")
      ->capture_default_str();
  sweep->add_flag("--analytic-only", sweep_opt.analytic_only,
                  "Emit the closed-form line instead of sampling");
  sweep->add_option("--out", sweep_opt.out_path,
                    "Write the CSV here instead of stdout");

  std::string state_path;
  CLI::App* witness = app.add_subcommand(
      "witness", "Analyze a state document: witness, PPT, concurrence");
  witness->add_option("state-file", state_path, "State document to analyze")
      ->required();

  CLI::App* state = app.add_subcommand("state", "Emit a state document");
  state->require_subcommand(1);
  double werner_p = 0.0;
  std::string werner_out;
  CLI::App* state_werner =
      state->add_subcommand("werner", "Analytic Werner state");
  state_werner->add_option("p", werner_p, "Singlet weight")->required();
  state_werner->add_option("--out", werner_out,
                           "Write the document here instead of stdout");
  double patchwork_f = 0.0;
  std::string patchwork_out;
  CLI::App* state_patchwork = state->add_subcommand(
      "patchwork", "Werner state via the sectored source pipeline");
  state_patchwork->add_option("f", patchwork_f, "Singlet sector fraction")
      ->required();
  state_patchwork->add_option("--out", patchwork_out,
                              "Write the document here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (sweep->parsed()) return run_sweep(sweep_opt);
  if (witness->parsed()) return run_witness(state_path);
  if (state_werner->parsed()) {
    polwit_state* s = nullptr;
    if (polwit_status status = polwit_state_werner(werner_p, &s)) {
      return fail_with(status, "state werner");
    }
    return emit_state(s, werner_out);
  }
  if (state_patchwork->parsed()) {
    polwit_state* s = nullptr;
    if (polwit_status status = polwit_state_patchwork(patchwork_f, &s)) {
      return fail_with(status, "state patchwork");
    }
    return emit_state(s, patchwork_out);
  }
  return 0;
}
