#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mflab/rational.hpp"

namespace mflab {

/// Truncated power series c0 + c1 q + ... + cN q^N + O(q^{N+1}) over Q.
/// Binary operations keep the smaller of the two orders.
class QSeries {
 public:
  QSeries() = default;
  /// Zero series known through q^order.
  explicit QSeries(int order);
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, int order);
  /// q itself, through q^order.
  static QSeries q(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Rational& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient; nullopt when zero to the known
  /// order.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  QSeries truncated(int order) const;
  /// Multiplicative inverse; needs a nonzero constant term.
  QSeries inverse() const;
  /// Divides by q^v; the first v coefficients must vanish. Order drops by v.
  QSeries shift_down(int v) const;
  /// f(q) -> f(q^d), kept at the same order.
  QSeries spread(int d) const;
  /// q d/dq.
  QSeries theta() const;
  QSeries pow(unsigned e) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

  double evaluate(double q) const;
  std::complex<double> evaluate(std::complex<double> q) const;

  /// "c0 + c1*q + ... + O(q^{N+1})"; zero coefficients are skipped.
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace mflab
