#include "mflab/bmatrix.hpp"

#include <unordered_map>

namespace mflab {

PolyMatrix bmatrix(long d, int i) {
  MonomialBasis basis = monomials(d, i);
  VectorField v = field_v();
  std::size_t m = basis.size();
  PolyMatrix b(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    b(0, j) = basis.seeds[j];
    for (std::size_t r = 1; r < m; ++r) b(r, j) = apply_derivation(v, b(r - 1, j));
  }
  return b;
}

MultiPoly jdet(long d, int i, std::size_t cap) {
  std::size_t m = monomials(d, i).size();
  if (m > cap) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "m = " + std::to_string(m) + " exceeds the symbolic size cap " + std::to_string(cap) +
                    "; raise the cap explicitly or evaluate B on a series or point instead");
  }
  return bareiss_det(bmatrix(d, i));
}

QSeries series_det(const Matrix<QSeries>& a) {
  if (!a.is_square()) throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return QSeries::constant(1, 0);
  if (n > 20) throw Error(ErrorCode::kSizeCapExceeded, "series determinant limited to 20 x 20");
  int order = a(0, 0).order();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) order = std::min(order, a(r, c).order());
  // minor[S] = det of rows 0..|S|-1 restricted to the columns in S
  std::vector<QSeries> minor(std::size_t{1} << n);
  std::vector<bool> known(minor.size(), false);
  minor[0] = QSeries::constant(1, order);
  known[0] = true;
  for (std::size_t s = 1; s < minor.size(); ++s) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s)) - 1;
    QSeries acc(order);
    int above = 0;  // columns of S to the right of c
    for (std::size_t c = n; c-- > 0;) {
      if (!(s & (std::size_t{1} << c))) continue;
      QSeries term = a(row, c) * minor[s ^ (std::size_t{1} << c)];
      if (above % 2) {
        acc -= term;
      } else {
        acc += term;
      }
      ++above;
    }
    minor[s] = std::move(acc);
  }
  return minor.back();
}

}  // namespace mflab
