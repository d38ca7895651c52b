#include "mflab/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "mflab/error.hpp"

namespace mflab {

QSeries::QSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, -1) + 1), Rational(0)) {}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries s(order);
  if (order >= 0) s[0] = c;
  return s;
}

QSeries QSeries::q(int order) {
  QSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

std::optional<int> QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return static_cast<int>(n);
  }
  return std::nullopt;
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw Error(ErrorCode::kPrecisionLoss, "cannot extend a truncated series");
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0) {
    throw Error(ErrorCode::kDivisionByZero, "series inverse needs a nonzero constant term");
  }
  int n = order();
  QSeries r(n);
  Rational inv0 = 1 / coeffs_[0];
  r[0] = inv0;
  Rational acc;
  Rational prod;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (coeffs_[static_cast<std::size_t>(j)] == 0) continue;
      mpq_mul(prod.get_mpq_t(), coeffs_[static_cast<std::size_t>(j)].get_mpq_t(), r[k - j].get_mpq_t());
      acc += prod;
    }
    r[k] = -acc * inv0;
  }
  return r;
}

QSeries QSeries::shift_down(int v) const {
  for (int k = 0; k < v && k <= order(); ++k) {
    if ((*this)[k] != 0) throw Error(ErrorCode::kDivisionByZero, "series is not divisible by this power of q");
  }
  if (v > order() + 1) throw Error(ErrorCode::kPrecisionLoss, "shift beyond known order");
  return QSeries(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

QSeries QSeries::spread(int d) const {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "spread factor must be positive");
  QSeries s(order());
  for (int n = 0; n * d <= order(); ++n) s[n * d] = (*this)[n];
  return s;
}

QSeries QSeries::theta() const {
  QSeries s(order());
  for (int n = 1; n <= order(); ++n) s[n] = (*this)[n] * n;
  return s;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries result = constant(1, order());
  QSeries base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order(), b.order());
  QSeries r(n);
  if (n < 0) return r;
  std::vector<int> nz_b;
  for (int j = 0; j <= n; ++j) {
    if (b[j] != 0) nz_b.push_back(j);
  }
  Rational prod;
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j : nz_b) {
      if (i + j > n) break;
      mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      r[i + j] += prod;
    }
  }
  return r;
}

double QSeries::evaluate(double q) const {
  double acc = 0;
  for (int n = order(); n >= 0; --n) acc = acc * q + (*this)[n].get_d();
  return acc;
}

std::complex<double> QSeries::evaluate(std::complex<double> q) const {
  std::complex<double> acc = 0;
  for (int n = order(); n >= 0; --n) acc = acc * q + (*this)[n].get_d();
  return acc;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    if ((*this)[n] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << (*this)[n].get_str();
    if (n == 1) os << "*q";
    if (n > 1) os << "*q^" << n;
  }
  if (!first) os << " + ";
  os << "O(q^" << order() + 1 << ")";
  return os.str();
}

}  // namespace mflab
