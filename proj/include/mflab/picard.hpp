#pragma once

#include "mflab/matrix.hpp"
#include "mflab/vector_field.hpp"

namespace mflab {

/// (a, b, c) with weights (2, 3, 4), the chart s = 1.
RingPtr picard_ring();
VectorField picard_field();
/// The 3x2 matrix alpha, entries stored verbatim; column i holds the
/// da, db, dc coefficients of alpha_i.
PolyMatrix picard_alpha();

struct PicardKernel {
  MultiPoly residual1;  // sum_j alpha_{j1} v_j
  MultiPoly residual2;
  std::size_t rank = 0;  // rank of alpha over the fraction field
};
PicardKernel kernel_check();

/// 27(-b^2 + 4a^3 - ca)^2 - c^3.
MultiPoly picard_discriminant_poly();
Rational picard_discriminant(const Rational& a, const Rational& b, const Rational& c);

}  // namespace mflab
