#include "contica/bvn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "contica/special.hpp"

namespace contica {

namespace {

using boost::math::quadrature::gauss;

struct Rule {
  std::span<const double> nodes;  // positive Gauss-Legendre nodes on [-1,1]
  std::span<const double> weights;
};

template <unsigned N>
Rule rule() {
  const auto& x = gauss<double, N>::abscissa();
  const auto& w = gauss<double, N>::weights();
  return {std::span<const double>(x.data(), x.size()), std::span<const double>(w.data(), w.size())};
}

// P(Z1 > h, Z2 > k) with correlation r.
double bvn_upper(double h, double k, double r) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double abs_r = std::abs(r);
  const Rule gl = abs_r < 0.3 ? rule<6>() : (abs_r < 0.75 ? rule<12>() : rule<20>());

  double hk = h * k;
  double bvn = 0.0;
  if (abs_r < 0.925) {
    const double hs = (h * h + k * k) / 2.0;
    const double asr = std::asin(r);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        const double sn = std::sin(asr * (sign * gl.nodes[i] + 1.0) / 2.0);
        bvn += gl.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
      }
    }
    return bvn * asr / (2.0 * two_pi) + normal_cdf(-h) * normal_cdf(-k);
  }

  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  if (abs_r < 1.0) {
    const double as = (1.0 - r) * (1.0 + r);
    double a = std::sqrt(as);
    const double bs = (h - k) * (h - k);
    const double c = (4.0 - hk) / 8.0;
    const double d = (12.0 - hk) / 16.0;
    bvn = a * std::exp(-(bs / as + hk) / 2.0) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    if (hk > -160.0) {
      const double b = std::sqrt(bs);
      bvn -= std::exp(-hk / 2.0) * std::sqrt(two_pi) * normal_cdf(-b / a) * b *
             (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a /= 2.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        const double xs = (a * (sign * gl.nodes[i] + 1.0)) * (a * (sign * gl.nodes[i] + 1.0));
        const double rs = std::sqrt(1.0 - xs);
        bvn += a * gl.weights[i] *
               (std::exp(-bs / (2.0 * xs) - hk / (1.0 + rs)) / rs -
                std::exp(-(bs / xs + hk) / 2.0) * (1.0 + c * xs * (1.0 + d * xs)));
      }
    }
    bvn = -bvn / two_pi;
  }
  if (r > 0.0) return bvn + normal_cdf(-std::max(h, k));
  bvn = -bvn;
  if (k > h) {
    bvn += h < 0.0 ? normal_cdf(k) - normal_cdf(h) : normal_cdf(-h) - normal_cdf(-k);
  }
  return bvn;
}

}  // namespace

double bvn_cdf(double h, double k, double rho) {
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("bvn_cdf: |rho| must be < 1");
  if (std::isnan(h) || std::isnan(k)) throw std::invalid_argument("bvn_cdf: NaN argument");
  if (h == -HUGE_VAL || k == -HUGE_VAL) return 0.0;
  if (h == HUGE_VAL) return normal_cdf(k);
  if (k == HUGE_VAL) return normal_cdf(h);
  const double value = bvn_upper(-h, -k, rho);
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace contica
