#pragma once

namespace contica {

/// P(Z1 <= h, Z2 <= k) for a standard bivariate normal with correlation rho.
/// Genz's double-precision variant of the Drezner-Wesolowsky method; absolute
/// error below 1e-14 in practice. h and k may be infinite. Throws
/// std::invalid_argument unless |rho| < 1.
double bvn_cdf(double h, double k, double rho);

}  // namespace contica
