#include "mflab/cusp.hpp"

#include "mflab/bmatrix.hpp"

namespace mflab {

std::string to_string(CuspPoint p) { return p == CuspPoint::kLeaf ? "leaf" : "literal"; }

std::string to_string(FourthPartial f) { return f == FourthPartial::kY3 ? "y3" : "x3"; }

std::array<Rational, 4> cusp_point(const Rational& r, CuspPoint which) {
  if (r == 1) throw Error(ErrorCode::kChartAtInfinity, "r = 1 lies at infinity");
  Rational u = 1 - r;
  Rational u2 = u * u;
  Rational u3 = u2 * u;
  Rational r2 = r * r;
  Rational r3 = r2 * r;
  if (which == CuspPoint::kLeaf) return {12 / u2, 8 / u3, 12 * r2 / u2, -8 * r3 / u3};
  return {12 * r2 / u2, -8 * r3 / u3, 12 / u2, 8 / u3};
}

RationalMatrix cusp_matrix(long d, int i, long a, long b, CuspPoint which, FourthPartial fourth) {
  if (a < 1 || b < 1 || a * b != d) throw Error(ErrorCode::kInvalidArgument, "need d = a*b with a, b >= 1");
  if (b >= a) throw Error(ErrorCode::kInvalidArgument, "need b < a");
  Rational r = make_rational(a, b);
  auto p = cusp_point(r, which);
  std::array<Rational, 4> w{(6 - 5 * r) * (1 - r), 7 * r - 6, r * r * (1 - r), Rational(0)};
  Rational last = -r * r * r;
  if (fourth == FourthPartial::kY3) {
    w[3] = last;
  } else {
    w[1] += last;
  }
  // directional derivative of B along w, from B at p + eps*w
  std::array<Dual, 4> pt;
  for (std::size_t k = 0; k < 4; ++k) pt[k] = Dual{p[k], w[k]};
  std::function<Dual(const Rational&)> lift = [](const Rational& c) { return Dual{c, Rational(0)}; };
  Matrix<Dual> bd = bmatrix_at(monomials(d, i), pt, lift);
  return bd.map([](const Dual& x) { return x.b; });
}

}  // namespace mflab
