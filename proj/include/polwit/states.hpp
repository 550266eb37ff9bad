#pragma once

#include "polwit/qmat.hpp"

namespace polwit {

// Spatial split of the emission ring into the singlet sector A and the two
// dephased sectors B and C. The pipeline requires B and C balanced.
class SectorPartition {
 public:
  SectorPartition(double singlet_fraction, double b_fraction,
                  double c_fraction);

  // (f, (1-f)/2, (1-f)/2)
  static SectorPartition balanced(double singlet_fraction);

  double singlet_fraction() const { return singlet_fraction_; }
  double b_fraction() const { return b_fraction_; }
  double c_fraction() const { return c_fraction_; }

 private:
  double singlet_fraction_;
  double b_fraction_;
  double c_fraction_;
};

// (|HV> - |VH>)/sqrt(2)
TwoQubitKet singlet();

// (|HH> + e^{i phase}|VV>)/sqrt(2), the phase-tunable source state.
TwoQubitKet bell_phi(double phase);

// Maximally mixed state, identity/4.
DensityMatrix chaotic();

// p |psi-><psi-| + (1-p)/4 * identity, p in [0, 1].
DensityMatrix werner(double p);

// Sector-by-sector source simulation: a half-wave plate at 45 degrees on
// arm B turns the phase-pi Bell state into the singlet everywhere; sectors
// B and C are then fully dephased in the joint H/V basis, and sector C gets
// a second 45-degree half-wave plate on arm A. The weighted mixture of the
// three sectors reproduces werner(singlet_fraction) entrywise.
DensityMatrix patchwork_pipeline(const SectorPartition& partition);

}  // namespace polwit
