#pragma once

#include <array>
#include <string>

#include "mflab/matrix.hpp"

namespace mflab {

/// Which singular-curve point the cusp matrix is built at, for r = a/b.
enum class CuspPoint {
  kLeaf,     // g([1:-r]), the constant term of the leaf parametrization
  kLiteral,  // g([r:-1])
};

/// Variable paired with the -r^3 coefficient.
enum class FourthPartial { kY3, kX3 };

std::string to_string(CuspPoint p);
std::string to_string(FourthPartial f);

/// Chart coordinates of the chosen point for r = a/b.
std::array<Rational, 4> cusp_point(const Rational& r, CuspPoint which);

/// dB/dx2 (6-5r)(1-r) + dB/dx3 (7r-6) + dB/dy2 r^2(1-r) - dB/d(y3|x3) r^3 at
/// the chosen point. Needs d = a*b and b < a.
RationalMatrix cusp_matrix(long d, int i, long a, long b, CuspPoint which = CuspPoint::kLeaf,
                           FourthPartial fourth = FourthPartial::kY3);

}  // namespace mflab
