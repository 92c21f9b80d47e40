#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace contica {

/// A point in the plane; also the corner of the lower orthant (-inf,x1]x(-inf,x2].
struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
  friend constexpr auto operator<=>(const Point2&, const Point2&) = default;
};

/// Entries of the symmetric matrix A*A^t.
struct Gram2 {
  double s11;
  double s12;
  double s22;
};

/// Invertible 2x2 mixing matrix. Construction rejects |det| <= 1e-12, so every
/// instance is usable by the CDF engine without further checks.
class MixingMatrix2 {
 public:
  static constexpr double kMinAbsDeterminant = 1e-12;

  MixingMatrix2(double a11, double a12, double a21, double a22);

  static MixingMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  /// [[1, 0], [alpha, sqrt(1-alpha^2)]]; requires |alpha| < 1.
  static MixingMatrix2 lower_causal(double alpha);
  /// [[sqrt(1-alpha^2), alpha], [0, 1]]; requires |alpha| < 1.
  static MixingMatrix2 upper_causal(double alpha);

  /// Parses "a11,a12,a21,a22".
  static MixingMatrix2 parse(std::string_view text);

  double a11() const noexcept { return a_[0]; }
  double a12() const noexcept { return a_[1]; }
  double a21() const noexcept { return a_[2]; }
  double a22() const noexcept { return a_[3]; }
  const std::array<double, 4>& entries() const noexcept { return a_; }

  double determinant() const noexcept { return a_[0] * a_[3] - a_[1] * a_[2]; }
  Gram2 gram() const noexcept;

  /// A*P where P swaps the two columns.
  MixingMatrix2 swapped_columns() const { return {a_[1], a_[0], a_[3], a_[2]}; }

  Point2 apply(double e1, double e2) const noexcept {
    return {a_[0] * e1 + a_[1] * e2, a_[2] * e1 + a_[3] * e2};
  }

  std::string to_string() const;

  friend bool operator==(const MixingMatrix2&, const MixingMatrix2&) = default;

 private:
  std::array<double, 4> a_;
};

/// The pair (A, B) used for the identifiability experiment: AA^t = BB^t but B
/// is not a signed column permutation of A.
struct MatrixPair {
  MixingMatrix2 a;
  MixingMatrix2 b;
};

inline MatrixPair causal_pair(double alpha) {
  return {MixingMatrix2::lower_causal(alpha), MixingMatrix2::upper_causal(alpha)};
}

}  // namespace contica
