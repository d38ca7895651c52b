#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mflab/error.hpp"
#include "mflab/multipoly.hpp"
#include "mflab/rational.hpp"

namespace mflab {

/// Dense row-major matrix over an exact ring (Rational, MultiPoly, QSeries).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::kShapeMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;
using RationalVector = std::vector<Rational>;

RationalMatrix identity_matrix(std::size_t n);
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

/// Fraction-free (Bareiss) determinants. All intermediate divisions are
/// exact; a failed exact division is reported as an internal error.
Rational bareiss_det(const RationalMatrix& m);
MultiPoly bareiss_det(const PolyMatrix& m);

/// Exact rank by fraction-free elimination over the integers (rows are
/// scaled to integer content first).
std::size_t rank_rational(const RationalMatrix& m);

/// Rank over the field of fractions of the polynomial ring.
std::size_t rank_poly(const PolyMatrix& m);

/// Basis of the right kernel: one vector per free column, normalized so the
/// first nonzero entry is 1. Empty iff the matrix has full column rank.
std::vector<RationalVector> nullspace_rational(const RationalMatrix& m);

}  // namespace mflab
