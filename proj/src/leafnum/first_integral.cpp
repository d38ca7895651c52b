#include <cmath>

#include "mflab/eisenstein.hpp"
#include "mflab/error.hpp"
#include "mflab/leafnum.hpp"

namespace mflab {

namespace {

constexpr int kSeriesOrder = 120;

CMatrix2 conj(const CMatrix2& a) {
  CMatrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = std::conj(a[i][j]);
  return r;
}

// Crude bound for the tail of the E6 normalization, the fastest-growing of
// the three: |coefficient n| <= 504/216 * n^6 after dividing by 216.
double tail_bound(double q) {
  double bound = 0;
  for (int n = kSeriesOrder + 1; n < kSeriesOrder + 400; ++n) {
    double term = 504.0 / 216.0 * std::pow(static_cast<double>(n), 6) * std::pow(q, n);
    bound += term;
    if (term < 1e-30) break;
  }
  return bound;
}

}  // namespace

CMatrix2 transcendental_F(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s,
                          const NumericTolerances& tol) {
  auto pt = periods(t, tol);
  auto ps = periods(s, tol);
  return mat_mul(ps.entries, mat_inverse(pt.entries));
}

FirstIntegral first_integral_B(const CMatrix2& f) {
  auto m = mat_mul(f, mat_inverse(conj(f)));
  Complex b = (m[0][0] + m[1][1]) / 2.0;
  return {b.real(), b.imag()};
}

FirstIntegral first_integral_B(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s,
                               const NumericTolerances& tol) {
  return first_integral_B(transcendental_F(t, s, tol));
}

std::pair<std::array<Complex, 3>, std::array<Complex, 3>> point_from_q(double q0, int d,
                                                                      const NumericTolerances& tol) {
  if (!(q0 > 0 && q0 < 1) || d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "point_from_q: need 0 < q0 < 1 and d >= 1");
  }
  if (tail_bound(q0) > tol.series_tail) {
    throw Error(ErrorCode::kPrecisionTooLow, "point_from_q: q0 too large for the truncated series");
  }
  static const EisensteinBasis g = eisenstein_basis(kSeriesOrder);
  const double qd = std::pow(q0, d), dd = d;
  std::array<Complex, 3> t{g.g1.evaluate(q0), g.g2.evaluate(q0), g.g3.evaluate(q0)};
  std::array<Complex, 3> s{dd * g.g1.evaluate(qd), dd * dd * g.g2.evaluate(qd), dd * dd * dd * g.g3.evaluate(qd)};
  return {t, s};
}

std::array<Complex, 4> chart_projection(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s) {
  Complex u = t[0] - s[0];
  if (std::abs(u) == 0) throw Error(ErrorCode::kChartAtInfinity, "chart_projection: t1 = s1");
  return {t[1] / (u * u), t[2] / (u * u * u), s[1] / (u * u), -s[2] / (u * u * u)};
}

std::pair<std::array<Complex, 3>, std::array<Complex, 3>> slice_lift(const std::array<Complex, 4>& p) {
  return {{Complex(1), p[0], p[1]}, {Complex(0), p[2], -p[3]}};
}

}  // namespace mflab
