#pragma once

#include "polwit/qmat.hpp"

namespace polwit {

// Strict-negativity threshold for entanglement verdicts: the boundary state
// itself is classified separable.
inline constexpr double kEntanglementTol = 1e-10;

// Indefinite Hermitian operator with unit trace; nonnegative expectation on
// every separable state, negative on the states it is built to flag.
class WitnessOperator {
 public:
  explicit WitnessOperator(const Mat4& m);

  const Mat4& m() const { return m_; }

 private:
  Mat4 m_;
};

// The six joint-projector expectations that assemble the witness from
// correlated local measurements.
struct ProjectorProbabilities {
  double hh = 0.0;
  double vv = 0.0;
  double dd = 0.0;
  double ff = 0.0;
  double lr = 0.0;
  double rl = 0.0;

  double reconstruct() const {
    return 0.5 * (hh + vv + dd + ff - lr - rl);
  }
};

struct PptResult {
  double min_eigenvalue = 0.0;
  bool entangled = false;
};

struct EntanglementVerdict {
  double witness_value = 0.0;
  double ppt_min_eigenvalue = 0.0;
  bool witnessed = false;
  bool ppt_entangled = false;
};

// (|HH><HH| + |VV><VV| + |DD><DD| + |FF><FF| - |LR><LR| - |RL><RL|) / 2,
// which collapses to identity/2 - |psi-><psi-|. Cached, immutable.
const WitnessOperator& witness_operator();

// Tr[W rho]
double witness_expectation(const DensityMatrix& rho);

// Closed form (1 - 3p)/4 of the witness expectation on werner(p); no matrix
// algebra involved.
double witness_analytic_werner(double p);

// The six projector expectations Tr[|xy><xy| rho]; reconstruct() recovers
// witness_expectation(rho).
ProjectorProbabilities witness_decomposition(const DensityMatrix& rho);

// Minimum eigenvalue of the partial transpose; for two qubits its
// negativity is necessary and sufficient for entanglement.
PptResult ppt_check(const DensityMatrix& rho, Arm arm = Arm::B);

EntanglementVerdict is_witnessed_entangled(const DensityMatrix& rho);

// Wootters concurrence: max(0, l1 - l2 - l3 - l4) with l_i the descending
// square roots of the spectrum of rho * spin_flip(rho). Zero exactly on
// separable two-qubit states; an entanglement oracle independent of both
// the witness and the partial transpose.
double concurrence(const DensityMatrix& rho);

}  // namespace polwit
