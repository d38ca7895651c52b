#include "doctest.h"
#include "mflab/picard.hpp"

using namespace mflab;

TEST_CASE("Picard field and discriminant") {
  auto r = picard_ring();
  VectorField v = picard_field();
  CHECK(v.component("a") == parse_poly("2*c - 24*a^2 + 6*a*b + 6*b", r));
  CHECK(v.component("b") == parse_poly("-(3*c - 36*a^2 + 36*a*b - 9*b^2)", r));
  std::vector<Rational> origin{0, 0, 0};
  for (const auto& c : v.components()) CHECK(evaluate(c, origin) == 0);
  CHECK(picard_discriminant(0, 0, 1) == -1);
  CHECK(picard_discriminant(0, 0, 0) == 0);
  CHECK(picard_discriminant(1, 2, 0) == 0);
}

TEST_CASE("Picard field homogeneity needs the s variable") {
  VectorField v = picard_field();
  CHECK_FALSE(v[0].weighted_degree().has_value());
  int shift = 0;
  VectorField h = homogenize_field(v, "s", &shift);
  for (std::size_t i = 0; i < 3; ++i) {
    auto deg = h[i].weighted_degree();
    REQUIRE(deg.has_value());
    CHECK(*deg == (*h.ring())[i].weight + shift);
  }
  CHECK(shift == 3);
}

TEST_CASE("Picard field lies in the kernel of alpha") {
  PicardKernel k = kernel_check();
  CHECK(k.residual1.is_zero());
  CHECK(k.residual2.is_zero());
  CHECK(k.rank == 2);
  // a perturbed field is caught
  PolyMatrix alpha = picard_alpha();
  MultiPoly bad = alpha(0, 0) * (picard_field()[0] + MultiPoly::constant(picard_ring(), 1)) +
                  alpha(1, 0) * picard_field()[1] + alpha(2, 0) * picard_field()[2];
  CHECK_FALSE(bad.is_zero());
}
