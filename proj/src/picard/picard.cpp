#include "mflab/picard.hpp"

namespace mflab {

RingPtr picard_ring() {
  static const RingPtr ring = make_ring({{"a", 2}, {"b", 3}, {"c", 4}});
  return ring;
}

VectorField picard_field() {
  auto r = picard_ring();
  return VectorField(r, {parse_poly("2*c - 24*a^2 + 6*a*b + 6*b", r),
                         parse_poly("-(3*c - 36*a^2 + 36*a*b - 9*b^2)", r),
                         parse_poly("12*c*a + 12*c*b - 144*a^3 + 36*b^2", r)});
}

PolyMatrix picard_alpha() {
  auto r = picard_ring();
  auto p = [&r](const char* text) { return parse_poly(text, r); };
  return PolyMatrix{
      {p("3*c^2 - 36*c*a^2 + 45*c*a*b - 108*a^3*b + 27*b^3"),
       p("-1/2*(9*c^2*a + 3*c^2*b - 144*c*a^3 + 54*c*a^2*b + 9*c*b^2 + 432*a^5 - 216*a^4*b - 108*a^2*b^2 + "
         "54*a*b^3)")},
      {p("2*c^2 - 30*c*a^2 + 6*c*b + 72*a^4 - 18*a*b^2"),
       p("-(2*c^2*a - 30*c*a^3 + 9*c*a*b + 3*c*b^2 + 72*a^5 - 36*a^3*b - 18*a^2*b^2 + 9*b^3)")},
      {p("-1/2*(3*c*a + 3*c*b - 36*a^3 + 9*b^2)"),
       p("1/4*(c^2 - 18*c*a^2 + 9*c*a*b + 72*a^4 - 36*a^3*b - 18*a*b^2 + 9*b^3)")},
  };
}

PicardKernel kernel_check() {
  PolyMatrix alpha = picard_alpha();
  VectorField v = picard_field();
  PicardKernel k;
  k.residual1 = MultiPoly(picard_ring());
  k.residual2 = MultiPoly(picard_ring());
  for (std::size_t j = 0; j < 3; ++j) {
    k.residual1 += alpha(j, 0) * v[j];
    k.residual2 += alpha(j, 1) * v[j];
  }
  k.rank = rank_poly(alpha);
  return k;
}

MultiPoly picard_discriminant_poly() {
  return parse_poly("27*(-b^2 + 4*a^3 - c*a)^2 - c^3", picard_ring());
}

Rational picard_discriminant(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Rational> at{a, b, c};
  return evaluate(picard_discriminant_poly(), at);
}

}  // namespace mflab
