#pragma once

#include <optional>
#include <span>
#include <string>

#include "mflab/multipoly.hpp"

namespace mflab {

/// num/den over one ring. Never gcd-reduced automatically; equality is
/// decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring() ? num_.ring() : den_.ring(); }

  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial num/den when den divides num exactly.
  std::optional<MultiPoly> as_polynomial() const;

  /// Divides num and den by their common constant factor and by any exact
  /// polynomial divisibility of num by den. Cheap, not a gcd.
  RationalFunction simplified() const;

  RationalFunction derivative(std::size_t var) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// Composition p(assignment); the denominator is the product of powers of
/// the assignment denominators. Throws kDivisionByZero when an assignment
/// denominator is the zero polynomial.
RationalFunction substitute(const MultiPoly& p, std::span<const RationalFunction> assignment);

}  // namespace mflab
