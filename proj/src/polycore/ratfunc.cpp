#include "mflab/ratfunc.hpp"

#include <algorithm>

namespace mflab {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.ring(), 1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
}

std::optional<MultiPoly> RationalFunction::as_polynomial() const { return divide_exact(num_, den_); }

RationalFunction RationalFunction::simplified() const {
  if (num_.is_zero()) return RationalFunction(MultiPoly(ring()), MultiPoly::constant(ring(), 1));
  if (auto q = divide_exact(num_, den_)) return RationalFunction(*q);
  // normalize so the leading denominator coefficient is 1
  Rational lead = den_.leading_term().second;
  MultiPoly n = num_ * (Rational(1) / lead);
  MultiPoly d = den_ * (Rational(1) / lead);
  return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction substitute(const MultiPoly& p, std::span<const RationalFunction> assignment) {
  if (!p.ring() || p.is_zero()) {
    RingPtr target = assignment.empty() ? RingPtr() : assignment[0].ring();
    return RationalFunction(MultiPoly(target), MultiPoly::constant(target, 1));
  }
  if (assignment.size() != p.ring()->size()) {
    throw Error(ErrorCode::kVariableMismatch, "substitute: assignment count does not match ring");
  }
  RingPtr target = assignment[0].ring();
  std::size_t n = assignment.size();
  std::vector<int> top(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i].den().is_zero()) {
      throw Error(ErrorCode::kDivisionByZero, "substitute: zero denominator");
    }
    top[i] = p.degree_in(i);
  }
  // common denominator prod den_i^top_i; each term contributes
  // num_i^e_i den_i^(top_i - e_i)
  std::vector<std::vector<MultiPoly>> num_pow(n);
  std::vector<std::vector<MultiPoly>> den_pow(n);
  MultiPoly den = MultiPoly::constant(target, 1);
  for (std::size_t i = 0; i < n; ++i) {
    num_pow[i].push_back(MultiPoly::constant(target, 1));
    den_pow[i].push_back(MultiPoly::constant(target, 1));
    for (int e = 1; e <= top[i]; ++e) {
      num_pow[i].push_back(num_pow[i].back() * assignment[i].num());
      den_pow[i].push_back(den_pow[i].back() * assignment[i].den());
    }
    den = den * den_pow[i][top[i]];
  }
  MultiPoly num(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < n; ++i) {
      int e = m[i];
      if (e) t = t * num_pow[i][e];
      if (top[i] - e) t = t * den_pow[i][top[i] - e];
    }
    num += t;
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace mflab
