#include "mflab/eisenstein.hpp"

#include "mflab/arith.hpp"
#include "mflab/builtin_fields.hpp"

namespace mflab {

QSeries eisenstein(int weight, int order) {
  if (weight != 2 && weight != 4 && weight != 6) {
    throw Error(ErrorCode::kInvalidArgument, "eisenstein weight must be 2, 4 or 6");
  }
  int k = weight / 2;
  Rational factor = Rational(4 * k) / bernoulli(k);
  if (k % 2) factor = -factor;
  QSeries s = QSeries::constant(1, order);
  for (int n = 1; n <= order; ++n) s[n] = factor * sigma(weight - 1, n);
  return s;
}

EisensteinBasis eisenstein_basis(int order) {
  return {eisenstein(2, order) * make_rational(1, 12), eisenstein(4, order) * make_rational(1, 12),
          eisenstein(6, order) * make_rational(1, 216)};
}

QSeries evaluate_series(const MultiPoly& p, const std::vector<QSeries>& point) {
  int order = point.empty() ? 0 : point[0].order();
  for (const auto& s : point) order = std::min(order, s.order());
  std::function<QSeries(const Rational&)> lift = [order](const Rational& c) {
    return QSeries::constant(c, order);
  };
  return evaluate<QSeries>(p, point, lift);
}

std::vector<QSeries> evaluate_field(const VectorField& v, const std::vector<QSeries>& point) {
  std::vector<QSeries> out;
  for (const auto& c : v.components()) out.push_back(evaluate_series(c, point));
  return out;
}

std::array<QSeries, 3> ramanujan_residuals(const EisensteinBasis& g) {
  std::vector<QSeries> pt{g.g1, g.g2, g.g3};
  auto r = evaluate_field(field_ramanujan(), pt);
  return {g.g1.theta() - r[0], g.g2.theta() - r[1], g.g3.theta() - r[2]};
}

LeafParam leaf_param(int d, int order) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "leaf parametrization needs d >= 2");
  EisensteinBasis g = eisenstein_basis(order);
  Rational dd(d);
  QSeries y = g.g1 - dd * g.g1.spread(d);
  QSeries inv = y.inverse();
  QSeries inv2 = inv * inv;
  QSeries inv3 = inv2 * inv;
  LeafParam p;
  p.d = d;
  p.order = order;
  p.x2 = g.g2 * inv2;
  p.x3 = g.g3 * inv3;
  p.y2 = dd * dd * g.g2.spread(d) * inv2;
  p.y3 = -(dd * dd * dd) * g.g3.spread(d) * inv3;
  p.y1series = std::move(y);
  return p;
}

std::vector<QSeries> minors_2x4(const std::vector<QSeries>& a, const std::vector<QSeries>& b, int order) {
  std::vector<QSeries> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) out.push_back((a[i] * b[j] - a[j] * b[i]).truncated(order));
  }
  return out;
}

std::vector<QSeries> tangency_minors(int d, int order) {
  LeafParam p = leaf_param(d, order);
  auto pt = p.point();
  auto vp = evaluate_field(field_v(), pt);
  std::vector<QSeries> dp;
  for (const auto& s : pt) dp.push_back(s.theta());
  return minors_2x4(vp, dp, order - 2);
}

}  // namespace mflab
