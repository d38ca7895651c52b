#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "mflab/builtin_fields.hpp"
#include "mflab/matrix.hpp"
#include "mflab/qseries.hpp"

namespace mflab {

/// Monomials of weighted degree i*psi(d) in (y_i, x2, x3), pure y power first.
/// `seeds` are the same monomials in the chart ring, with y1 = 1 for i = 1.
struct MonomialBasis {
  long d = 0;
  int i = 0;
  std::vector<std::array<int, 3>> exponents;
  std::vector<MultiPoly> seeds;

  std::size_t size() const { return exponents.size(); }
};
MonomialBasis monomials(long d, int i);

/// m x m matrix with entry (r, j) = v^r(seed_j).
PolyMatrix bmatrix(long d, int i);

/// det B_{d,i}. Throws kSizeCapExceeded when m exceeds `cap`.
MultiPoly jdet(long d, int i, std::size_t cap = 8);

/// Determinant by cofactor expansion memoized over column subsets; needs
/// only ring operations, so it works over truncated series.
QSeries series_det(const Matrix<QSeries>& m);

/// v^r(seed_j) at a point, from the Taylor expansion of the flow of v
/// through that point: v^r(f)(p) = r! [t^r] f(x(t)). T needs +, -, * and
/// construction from a Rational through `lift`.
template <class T>
Matrix<T> bmatrix_at(const MonomialBasis& basis, const std::array<T, 4>& point,
                     const std::function<T(const Rational&)>& lift);

/// B_{d,i}(p) * C.
template <class T>
std::vector<T> coefficient_check(long d, int i, const std::array<T, 4>& point, const std::vector<T>& c,
                                 const std::function<T(const Rational&)>& lift);

// -- implementation ------------------------------------------------------------

namespace detail {

// Truncated power series in the flow time t.
template <class T>
struct Jet {
  std::vector<T> c;

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r{a.c};
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = r.c[k] + b.c[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    std::size_t n = a.c.size();
    Jet r{std::vector<T>(n, a.c[0] - a.c[0])};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
  }
};

}  // namespace detail

template <class T>
Matrix<T> bmatrix_at(const MonomialBasis& basis, const std::array<T, 4>& point,
                     const std::function<T(const Rational&)>& lift) {
  using J = detail::Jet<T>;
  std::size_t m = basis.size();
  VectorField v = field_v();
  T zero = lift(Rational(0));
  auto constant_jet = [&](const T& x) {
    J j{std::vector<T>(m, zero)};
    j.c[0] = x;
    return j;
  };
  std::function<J(const Rational&)> jlift = [&](const Rational& c) { return constant_jet(lift(c)); };

  // flow coefficients: x_{n+1} = [v(x)]_n / (n + 1)
  std::vector<J> x;
  for (const auto& p : point) x.push_back(constant_jet(p));
  for (std::size_t n = 0; n + 1 < m; ++n) {
    std::vector<T> next;
    for (std::size_t k = 0; k < 4; ++k) {
      J vk = evaluate<J>(v[k], x, jlift);
      next.push_back(vk.c[n] * lift(make_rational(1, static_cast<long>(n) + 1)));
    }
    for (std::size_t k = 0; k < 4; ++k) x[k].c[n + 1] = next[k];
  }
  Matrix<T> b(m, m, zero);
  for (std::size_t j = 0; j < m; ++j) {
    J f = evaluate<J>(basis.seeds[j], x, jlift);
    Rational fact = 1;
    for (std::size_t r = 0; r < m; ++r) {
      if (r > 0) fact *= static_cast<long>(r);
      b(r, j) = f.c[r] * lift(fact);
    }
  }
  return b;
}

template <class T>
std::vector<T> coefficient_check(long d, int i, const std::array<T, 4>& point, const std::vector<T>& c,
                                 const std::function<T(const Rational&)>& lift) {
  MonomialBasis basis = monomials(d, i);
  if (c.size() != basis.size()) throw Error(ErrorCode::kShapeMismatch, "coefficient vector has the wrong length");
  Matrix<T> b = bmatrix_at(basis, point, lift);
  std::vector<T> out;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    T acc = lift(Rational(0));
    for (std::size_t k = 0; k < b.cols(); ++k) acc = acc + b(r, k) * c[k];
    out.push_back(acc);
  }
  return out;
}

/// First-order jets a + b*eps with eps^2 = 0, for directional derivatives.
struct Dual {
  Rational a;
  Rational b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
};

}  // namespace mflab
