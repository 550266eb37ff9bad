#pragma once

#include <stdexcept>
#include <string>

namespace polwit {

// One code per violated invariant, so callers (and the C API) can tell a
// malformed document from a matrix that fails validation.
enum class Errc {
  invalid_argument,
  non_finite,
  not_normalized,
  not_unitary,
  not_hermitian,
  bad_trace,
  not_positive,
  parse,
  zero_total,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace polwit
