#include "polwit.h"

#include <cstring>
#include <new>
#include <string>

#include "polwit/rng.hpp"
#include "polwit/states.hpp"
#include "polwit/stateio.hpp"
#include "polwit/sweep.hpp"

struct polwit_state {
  polwit::DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

polwit_status status_from_errc(polwit::Errc code) {
  switch (code) {
    case polwit::Errc::parse: return POLWIT_ERR_PARSE;
    case polwit::Errc::not_hermitian: return POLWIT_ERR_NOT_HERMITIAN;
    case polwit::Errc::bad_trace: return POLWIT_ERR_TRACE;
    case polwit::Errc::not_positive: return POLWIT_ERR_NOT_POSITIVE;
    default: return POLWIT_ERR_INVALID_ARGUMENT;
  }
}

polwit_status fail(polwit_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
polwit_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const polwit::Error& e) {
    return fail(status_from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(POLWIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(POLWIT_ERR_INTERNAL, e.what());
  }
}

polwit_status require(const void* p, const char* name) {
  if (p == nullptr) {
    return fail(POLWIT_ERR_NULL_ARGUMENT,
                std::string(name) + " must not be null");
  }
  return POLWIT_OK;
}

polwit_status make_state(polwit::DensityMatrix rho, polwit_state** out) {
  *out = new polwit_state{std::move(rho)};
  return POLWIT_OK;
}

polwit_status copy_to_buffer(const std::string& text, char* buf, size_t cap,
                             size_t* len) {
  if (buf == nullptr || cap < text.size() + 1) {
    *len = text.size() + 1;
    return fail(POLWIT_ERR_BUFFER_TOO_SMALL,
                "buffer too small; required capacity stored in *len");
  }
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  *len = text.size();
  return POLWIT_OK;
}

}  // namespace

extern "C" {

const char* polwit_version(void) { return "1.0.0"; }

const char* polwit_status_name(polwit_status status) {
  switch (status) {
    case POLWIT_OK: return "ok";
    case POLWIT_ERR_NULL_ARGUMENT: return "null_argument";
    case POLWIT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case POLWIT_ERR_PARSE: return "parse";
    case POLWIT_ERR_NOT_HERMITIAN: return "not_hermitian";
    case POLWIT_ERR_TRACE: return "trace";
    case POLWIT_ERR_NOT_POSITIVE: return "not_positive";
    case POLWIT_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case POLWIT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* polwit_last_error(void) { return g_last_error.c_str(); }

polwit_status polwit_state_werner(double p, polwit_state** out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] { return make_state(polwit::werner(p), out); });
}

polwit_status polwit_state_patchwork(double singlet_fraction,
                                     polwit_state** out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    return make_state(polwit::patchwork_pipeline(
                          polwit::SectorPartition::balanced(singlet_fraction)),
                      out);
  });
}

polwit_status polwit_state_bell(double phase, polwit_state** out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    return make_state(polwit::projector(polwit::bell_phi(phase)), out);
  });
}

polwit_status polwit_state_singlet(polwit_state** out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    return make_state(polwit::projector(polwit::singlet()), out);
  });
}

polwit_status polwit_state_chaotic(polwit_state** out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] { return make_state(polwit::chaotic(), out); });
}

polwit_status polwit_state_from_parts(const double re[16],
                                      const double im[16],
                                      polwit_state** out) {
  if (polwit_status s = require(re, "re")) return s;
  if (polwit_status s = require(im, "im")) return s;
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    polwit::Mat4 m;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        m(r, c) = polwit::Complex(re[4 * r + c], im[4 * r + c]);
      }
    }
    return make_state(polwit::DensityMatrix(m), out);
  });
}

void polwit_state_free(polwit_state* state) { delete state; }

polwit_status polwit_state_parts(const polwit_state* state, double re[16],
                                 double im[16]) {
  if (polwit_status s = require(state, "state")) return s;
  if (polwit_status s = require(re, "re")) return s;
  if (polwit_status s = require(im, "im")) return s;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      re[4 * r + c] = state->rho.m()(r, c).real();
      im[4 * r + c] = state->rho.m()(r, c).imag();
    }
  }
  return POLWIT_OK;
}

polwit_status polwit_state_serialize(const polwit_state* state, char* buf,
                                     size_t cap, size_t* len) {
  if (polwit_status s = require(state, "state")) return s;
  if (polwit_status s = require(len, "len")) return s;
  return guarded([&] {
    return copy_to_buffer(polwit::serialize_state(state->rho), buf, cap, len);
  });
}

polwit_status polwit_state_parse(const char* text, polwit_state** out) {
  if (polwit_status s = require(text, "text")) return s;
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] { return make_state(polwit::parse_state(text), out); });
}

polwit_status polwit_witness_value(const polwit_state* state, double* out) {
  if (polwit_status s = require(state, "state")) return s;
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    *out = polwit::witness_expectation(state->rho);
    return POLWIT_OK;
  });
}

polwit_status polwit_witness_analytic_werner(double p, double* out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    *out = polwit::witness_analytic_werner(p);
    return POLWIT_OK;
  });
}

polwit_status polwit_analyze(const polwit_state* state, polwit_verdict* out) {
  if (polwit_status s = require(state, "state")) return s;
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    const polwit::EntanglementVerdict v =
        polwit::is_witnessed_entangled(state->rho);
    out->witness_value = v.witness_value;
    out->ppt_min_eigenvalue = v.ppt_min_eigenvalue;
    out->concurrence = polwit::concurrence(state->rho);
    out->witnessed = v.witnessed ? 1 : 0;
    out->ppt_entangled = v.ppt_entangled ? 1 : 0;
    return POLWIT_OK;
  });
}

polwit_status polwit_measure_witness(const polwit_state* state,
                                     double rate_cps, double duration_s,
                                     uint64_t seed, polwit_estimate* out) {
  if (polwit_status s = require(state, "state")) return s;
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    const polwit::SimulationConfig cfg{rate_cps, duration_s, seed};
    const auto settings = polwit::kAllBases;
    std::array<polwit::CoincidenceRecord, 3> records;
    for (std::size_t i = 0; i < settings.size(); ++i) {
      records[i] = polwit::sample_counts(
          state->rho, polwit::MeasurementSetting::correlated(settings[i]),
          cfg);
    }
    const polwit::WitnessEstimate estimate =
        polwit::estimate_witness(records[0], records[1], records[2]);
    out->value = estimate.value;
    out->std_error = estimate.std_error;
    out->p_hh = estimate.probabilities.hh;
    out->p_vv = estimate.probabilities.vv;
    out->p_dd = estimate.probabilities.dd;
    out->p_ff = estimate.probabilities.ff;
    out->p_lr = estimate.probabilities.lr;
    out->p_rl = estimate.probabilities.rl;
    for (int i = 0; i < 3; ++i) out->totals[i] = records[i].total;
    return POLWIT_OK;
  });
}

polwit_status polwit_sweep_point(double p, double rate_cps, double duration_s,
                                 uint64_t master_seed, uint64_t point_index,
                                 int analytic_only, polwit_sweep_row* out) {
  if (polwit_status s = require(out, "out")) return s;
  return guarded([&] {
    const polwit::SimulationConfig sim{rate_cps, duration_s, master_seed};
    const polwit::SweepRow row =
        polwit::sweep_point(p, sim, point_index, analytic_only != 0);
    out->p = row.p;
    out->w_est = row.w_est;
    out->w_err = row.w_err;
    out->w_analytic = row.w_analytic;
    out->ppt_min_eig = row.ppt_min_eig;
    out->entangled_ppt = row.entangled_ppt ? 1 : 0;
    return POLWIT_OK;
  });
}

polwit_status polwit_sweep_csv(const double* p_values, size_t n,
                               double rate_cps, double duration_s,
                               uint64_t seed, int analytic_only, char* buf,
                               size_t cap, size_t* len) {
  if (polwit_status s = require(p_values, "p_values")) return s;
  if (polwit_status s = require(len, "len")) return s;
  return guarded([&] {
    polwit::SweepConfig cfg;
    cfg.p_values.assign(p_values, p_values + n);
    cfg.simulation = polwit::SimulationConfig{rate_cps, duration_s, seed};
    cfg.analytic_only = analytic_only != 0;
    const std::vector<polwit::SweepRow> rows = polwit::run_sweep(cfg);
    return copy_to_buffer(polwit::sweep_csv(rows), buf, cap, len);
  });
}

uint64_t polwit_derive_seed(uint64_t master, uint64_t ordinal) {
  return polwit::derive_seed(master, ordinal);
}

}  // extern "C"
