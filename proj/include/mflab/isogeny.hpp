#pragma once

#include <array>
#include <algorithm>
#include <complex>
#include <string>

#include "mflab/error.hpp"
#include "mflab/rational.hpp"

namespace mflab {

/// Source curve (t2, t3), target curve (s2, s3), normalization scalars k, k'.
template <class T>
struct IsogenyInput {
  T t2;
  T t3;
  T s2;
  T s3;
  T k;
  T kp;
};

enum class IsogenyFormula {
  /// (t2 k^-2 k'^-2, t3 k^-3 k'^-3, s2 k^2 k'^-2, -s3 k^3 k'^-3)
  kDerived,
  /// (t2 k^2 k'^-2, t3 k^3 k'^-3, s2 k^2 k'^-2, -s3 k^3 k'^-3), the alternative normalization
  kPrinted,
};

std::string to_string(IsogenyFormula f);

namespace detail {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const std::complex<double>& x) { return std::abs(x) == 0.0; }
inline bool near_zero(const Rational& x, const Rational&) { return x == 0; }
inline bool near_zero(const std::complex<double>& x, const std::complex<double>& scale) {
  return std::abs(x) <= 1e-12 * std::max(1.0, std::abs(scale));
}
}  // namespace detail

/// Chart point of the isogeny. Throws kChartAtInfinity when k' = 0,
/// kInvalidArgument when k = 0 and kOnDiscriminant for a singular curve.
template <class T>
std::array<T, 4> isogeny_point(const IsogenyInput<T>& in, IsogenyFormula formula = IsogenyFormula::kDerived) {
  if (detail::is_zero(in.kp)) throw Error(ErrorCode::kChartAtInfinity, "k' = 0: the point is at infinity");
  if (detail::is_zero(in.k)) throw Error(ErrorCode::kInvalidArgument, "k must be nonzero");
  T ts = T(27) * in.t3 * in.t3;
  T tc = in.t2 * in.t2 * in.t2;
  T ss = T(27) * in.s3 * in.s3;
  T sc = in.s2 * in.s2 * in.s2;
  if (detail::near_zero(ts - tc, tc) || detail::near_zero(ss - sc, sc)) {
    throw Error(ErrorCode::kOnDiscriminant, "curve is singular (27 t3^2 = t2^3)");
  }
  T k = in.k;
  T k2 = k * k;
  T k3 = k2 * k;
  T kp2 = in.kp * in.kp;
  T kp3 = kp2 * in.kp;
  if (formula == IsogenyFormula::kDerived) {
    return {in.t2 / (k2 * kp2), in.t3 / (k3 * kp3), in.s2 * k2 / kp2, -in.s3 * k3 / kp3};
  }
  return {in.t2 * k2 / kp2, in.t3 * k3 / kp3, in.s2 * k2 / kp2, -in.s3 * k3 / kp3};
}

}  // namespace mflab
