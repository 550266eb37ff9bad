#pragma once

#include <string>
#include <string_view>

#include "polwit/qmat.hpp"

namespace polwit {

// State document: `dim 4`, a `re` block and an `im` block, each holding the
// 4x4 row-major real and imaginary parts at 17 significant digits, so a
// parse of a serialized state is entrywise exact.
std::string serialize_state(const DensityMatrix& rho);

// Parses and validates a state document. Throws Error with code
// Errc::parse for malformed syntax and the matching code (not_hermitian,
// bad_trace, not_positive) with the measured residual when the matrix
// fails a density-matrix invariant.
DensityMatrix parse_state(std::string_view document);

}  // namespace polwit
