#pragma once

#include <array>
#include <string>
#include <vector>

#include "mflab/multipoly.hpp"
#include "mflab/qseries.hpp"

namespace mflab {

/// Q_{d,i} found as the kernel of the q-expansion coefficient matrix.
///
/// The solver form is the relation among the modular forms
///   i=1: D = d g1(q^d) - g1(q),  i=2: d^2 g2(q^d),  i=3: d^3 g3(q^d)
/// and x2 = g2(q), x3 = g3(q). The chart form is the equation of the leaf in
/// chart coordinates; it differs by y_i -> -y_i for i = 1, 3.
struct ModularEquation {
  int d = 0;
  int i = 0;
  long psi = 0;
  int order = 0;           // N used for the solve
  int verified_order = 0;  // order at which the residual was checked
  std::vector<std::array<int, 3>> exponents;
  std::vector<Rational> solver_coefficients;
  std::vector<Rational> chart_coefficients;
  MultiPoly solver;
  MultiPoly chart;
};

/// (y_i, x2, x3) with weights (i, 2, 3).
RingPtr modeq_ring(int i);
int default_modeq_order(int d, int i);

/// Throws kPrecisionTooLow for an empty kernel, kUnderdetermined for a
/// kernel of dimension at least 2, kPrecisionLoss when the doubled-order
/// residual is nonzero. order <= 0 selects the default.
ModularEquation modeq_solve(int d, int i, int order = 0);

/// Q evaluated on the solver-convention series for level d.
QSeries modeq_residual(const MultiPoly& q, int d, int order);

/// Human-readable description of the y_i argument for the solver form.
std::string modeq_convention(int i);

}  // namespace mflab
