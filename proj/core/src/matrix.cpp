#include "contica/matrix.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace contica {

MixingMatrix2::MixingMatrix2(double a11, double a12, double a21, double a22)
    : a_{a11, a12, a21, a22} {
  for (double v : a_) {
    if (!std::isfinite(v)) throw std::invalid_argument("mixing matrix entries must be finite");
  }
  if (!(std::abs(determinant()) > kMinAbsDeterminant)) {
    throw std::invalid_argument("mixing matrix is not invertible (|det| <= 1e-12)");
  }
}

MixingMatrix2 MixingMatrix2::lower_causal(double alpha) {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("alpha must satisfy |alpha| < 1");
  return {1.0, 0.0, alpha, std::sqrt(1.0 - alpha * alpha)};
}

MixingMatrix2 MixingMatrix2::upper_causal(double alpha) {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("alpha must satisfy |alpha| < 1");
  return {std::sqrt(1.0 - alpha * alpha), alpha, 0.0, 1.0};
}

MixingMatrix2 MixingMatrix2::parse(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed matrix entry '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw std::invalid_argument("malformed matrix entry '" + token + "'");
    values.push_back(v);
    start = end + 1;
  }
  if (values.size() != 4) throw std::invalid_argument("matrix needs exactly 4 entries a11,a12,a21,a22");
  return {values[0], values[1], values[2], values[3]};
}

Gram2 MixingMatrix2::gram() const noexcept {
  return {a_[0] * a_[0] + a_[1] * a_[1], a_[0] * a_[2] + a_[1] * a_[3],
          a_[2] * a_[2] + a_[3] * a_[3]};
}

std::string MixingMatrix2::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << a_[0] << ',' << a_[1] << ',' << a_[2] << ',' << a_[3];
  return os.str();
}

}  // namespace contica
