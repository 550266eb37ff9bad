#include "polwit/stateio.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace polwit {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<std::string_view> tokens)
      : tokens_(std::move(tokens)) {}

  std::string_view next(const char* expected_what) {
    if (pos_ >= tokens_.size()) {
      std::ostringstream os;
      os << "unexpected end of document, expected " << expected_what;
      throw Error(Errc::parse, os.str());
    }
    return tokens_[pos_++];
  }

  void expect_keyword(std::string_view keyword) {
    const std::string_view token = next(std::string(keyword).c_str());
    if (token != keyword) {
      std::ostringstream os;
      os << "expected field '" << keyword << "', got '" << token << "'";
      throw Error(Errc::parse, os.str());
    }
  }

  double number(const char* what) {
    const std::string_view token = next(what);
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      std::ostringstream os;
      os << "invalid number '" << token << "' for " << what;
      throw Error(Errc::parse, os.str());
    }
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os << "non-finite entry '" << token << "' for " << what;
      throw Error(Errc::parse, os.str());
    }
    return value;
  }

  void expect_end() {
    if (pos_ != tokens_.size()) {
      std::ostringstream os;
      os << "trailing content starting at '" << tokens_[pos_] << "'";
      throw Error(Errc::parse, os.str());
    }
  }

 private:
  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 0;
};

void append_block(std::string& out, const char* name,
                  const std::array<double, 16>& values) {
  out += name;
  out += '\n';
  char buf[32];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", values[4 * r + c]);
      out += buf;
      out += c == 3 ? '\n' : ' ';
    }
  }
}

}  // namespace

std::string serialize_state(const DensityMatrix& rho) {
  std::array<double, 16> re;
  std::array<double, 16> im;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      re[4 * r + c] = rho.m()(r, c).real();
      im[4 * r + c] = rho.m()(r, c).imag();
    }
  }
  std::string out = "dim 4\n";
  append_block(out, "re", re);
  append_block(out, "im", im);
  return out;
}

DensityMatrix parse_state(std::string_view document) {
  TokenReader reader(tokenize(document));
  reader.expect_keyword("dim");
  const double dim = reader.number("dim");
  if (dim != 4.0) {
    std::ostringstream os;
    os << "only dim 4 states are supported, got dim " << dim;
    throw Error(Errc::parse, os.str());
  }
  std::array<double, 16> re;
  std::array<double, 16> im;
  reader.expect_keyword("re");
  for (double& value : re) value = reader.number("re entry");
  reader.expect_keyword("im");
  for (double& value : im) value = reader.number("im entry");
  reader.expect_end();

  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m(r, c) = Complex(re[4 * r + c], im[4 * r + c]);
    }
  }
  return DensityMatrix(m);
}

}  // namespace polwit
