#include <algorithm>

#include "mflab/matrix.hpp"

namespace mflab {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::kShapeMismatch, "matrix-vector shape mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

namespace {

// Integer matrix whose rows are the rows of m scaled by their denominator lcm.
// The returned factor is the product of those scales.
Matrix<Integer> integer_rows(const RationalMatrix& m, Integer* scale) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free elimination over Z. Returns rank; det receives the
// determinant when the matrix is square.
std::size_t bareiss_integer(Matrix<Integer> a, Integer* det) {
  std::size_t rows = a.rows();
  std::size_t cols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) {
      if (det) *det = 0;
      continue;
    }
    if (p != rank) {
      a.swap_rows(p, rank);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = a(rank, c) * a(r, k) - a(r, c) * a(rank, k);
        mpz_divexact(a(r, k).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(r, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  if (det && rows == cols) *det = rank == rows ? Integer(prev * sign) : Integer(0);
  return rank;
}

}  // namespace

Rational bareiss_det(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale;
  Matrix<Integer> a = integer_rows(m, &scale);
  Integer det;
  bareiss_integer(std::move(a), &det);
  return make_rational(det, scale);
}

std::size_t rank_rational(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_integer(integer_rows(m, nullptr), nullptr);
}

namespace {

// Row elimination over the fraction field; pivots prefer the sparsest
// nonzero entry to limit growth.
std::size_t bareiss_poly(PolyMatrix a, MultiPoly* det) {
  std::size_t rows = a.rows();
  std::size_t cols = a.cols();
  RingPtr ring;
  for (std::size_t r = 0; r < rows && !ring; ++r)
    for (std::size_t c = 0; c < cols && !ring; ++c) ring = a(r, c).ring();
  MultiPoly prev = MultiPoly::constant(ring, 1);
  int sign = 1;
  std::size_t rank = 0;
  bool singular = false;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a(r, c).is_zero()) continue;
      if (p == rows || a(r, c).size() < a(p, c).size()) p = r;
    }
    if (p == rows) {
      singular = true;
      continue;
    }
    if (p != rank) {
      a.swap_rows(p, rank);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        MultiPoly v = a(rank, c) * a(r, k) - a(r, c) * a(rank, k);
        auto q = divide_exact(v, prev);
        if (!q) throw Error(ErrorCode::kPrecisionLoss, "internal: inexact Bareiss division");
        a(r, k) = std::move(*q);
      }
      a(r, c) = MultiPoly(ring);
    }
    prev = a(rank, c);
    ++rank;
  }
  if (det) {
    if (singular || rank < rows) {
      *det = MultiPoly(ring);
    } else {
      *det = sign < 0 ? -prev : prev;
    }
  }
  return rank;
}

}  // namespace

MultiPoly bareiss_det(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly();
  MultiPoly det;
  bareiss_poly(m, &det);
  return det;
}

std::size_t rank_poly(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_poly(m, nullptr);
}

std::vector<RationalVector> nullspace_rational(const RationalMatrix& m) {
  // reduced row echelon form over Q
  RationalMatrix a = m;
  std::size_t rows = a.rows();
  std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (a(r, k) != 0) a(i, k) -= f * a(r, k);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<RationalVector> basis;
  std::size_t pi = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pi < pivot_cols.size() && pivot_cols[pi] == free) {
      ++pi;
      continue;
    }
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    Rational lead = *first;
    for (auto& x : v) x /= lead;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mflab
