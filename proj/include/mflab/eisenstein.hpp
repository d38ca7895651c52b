#pragma once

#include <array>
#include <vector>

#include "mflab/qseries.hpp"
#include "mflab/vector_field.hpp"

namespace mflab {

/// 1 + (-1)^k (4k / B_k) sum sigma_{2k-1}(n) q^n for weight 2k, k in {1,2,3}.
QSeries eisenstein(int weight, int order);

/// (E2/12, E4/12, E6/216).
struct EisensteinBasis {
  QSeries g1;
  QSeries g2;
  QSeries g3;
};
EisensteinBasis eisenstein_basis(int order);

/// theta(g) minus the Ramanujan field evaluated at g, one series per
/// component; all three vanish for the true basis.
std::array<QSeries, 3> ramanujan_residuals(const EisensteinBasis& g);

/// Chart coordinates of the leaf through the cusp at infinity of level d.
struct LeafParam {
  int d = 0;
  int order = 0;
  QSeries x2;
  QSeries x3;
  QSeries y2;
  QSeries y3;
  QSeries y1series;  // g1(q) - d g1(q^d)

  std::vector<QSeries> point() const { return {x2, x3, y2, y3}; }
};
LeafParam leaf_param(int d, int order);

/// The six 2x2 minors of the matrix with rows v(P) and theta(P) along the
/// leaf, truncated to order - 2.
std::vector<QSeries> tangency_minors(int d, int order);
/// Minors of two explicit rows of four series.
std::vector<QSeries> minors_2x4(const std::vector<QSeries>& a, const std::vector<QSeries>& b, int order);

/// Evaluates every component of `v` at the series point.
std::vector<QSeries> evaluate_field(const VectorField& v, const std::vector<QSeries>& point);
QSeries evaluate_series(const MultiPoly& p, const std::vector<QSeries>& point);

}  // namespace mflab
