#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mflab/vector_field.hpp"

namespace mflab {

using Complex = std::complex<double>;
using CMatrix2 = std::array<std::array<Complex, 2>, 2>;

/// Every numeric tolerance used by the module, in one place.
struct NumericTolerances {
  double legendre = 1e-9;      // |-det P - 2 pi i|
  double quadrature = 1e-14;   // relative change between refinements
  double degenerate = 1e-12;   // |27 t3^2 - t2^3| relative to |t2|^3 + 27|t3|^2
  double series_tail = 1e-14;  // truncation bound for point_from_q
  double blow_up = 1e12;       // RK4 stops once a coordinate exceeds this
};

/// Rows are the cycles (delta, gamma); columns the integrals of dx/y and
/// x dx/y over E_t: y^2 = 4(x - t1)^3 - t2 (x - t1) - t3.
struct PeriodMatrix {
  CMatrix2 entries{};
  double legendre_residual = 0;  // |-det - 2 pi i|
};

/// Orientation: Im(x1 conj(x3)) > 0, which forces det = -2 pi i. Throws kDegenerateCurve on 27 t3^2 = t2^3.
PeriodMatrix periods(const std::array<Complex, 3>& t, const NumericTolerances& tol = {});

/// Roots of 4u^3 - t2 u - t3.
std::array<Complex, 3> weierstrass_roots(Complex t2, Complex t3);

CMatrix2 mat_mul(const CMatrix2& a, const CMatrix2& b);
CMatrix2 mat_inverse(const CMatrix2& a);
Complex mat_det(const CMatrix2& a);

/// F = pm(s) pm(t)^{-1}.
CMatrix2 transcendental_F(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s,
                          const NumericTolerances& tol = {});

struct FirstIntegral {
  double value = 0;      // Re of (1/2) Tr(F conj(F)^{-1})
  double imaginary = 0;  // its imaginary part, zero up to rounding
};
FirstIntegral first_integral_B(const CMatrix2& f);
FirstIntegral first_integral_B(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s,
                               const NumericTolerances& tol = {});

/// t = (g1, g2, g3)(q0), s = (d g1, d^2 g2, d^3 g3)(q0^d). Throws
/// kPrecisionTooLow when the truncated series tail exceeds the tolerance.
std::pair<std::array<Complex, 3>, std::array<Complex, 3>> point_from_q(double q0, int d,
                                                                      const NumericTolerances& tol = {});

/// Chart point (x2, x3, y2, y3) of a (t, s) pair.
std::array<Complex, 4> chart_projection(const std::array<Complex, 3>& t, const std::array<Complex, 3>& s);
/// (t, s) on the slice t1 = 1, s1 = 0 over a chart point.
std::pair<std::array<Complex, 3>, std::array<Complex, 3>> slice_lift(const std::array<Complex, 4>& p);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<Complex>> points;
  bool blew_up = false;
};

/// Classical RK4 in real time; records every `sample_every`-th step plus
/// the endpoint.
Trajectory rk4_integrate(const VectorField& v, const std::vector<Complex>& start, double time, double step,
                         int sample_every = 1, const NumericTolerances& tol = {});

}  // namespace mflab
