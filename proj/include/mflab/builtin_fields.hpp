#pragma once

#include <array>
#include <optional>

#include "mflab/vector_field.hpp"

namespace mflab {

/// (t1, t2, t3) with weights (1, 2, 3).
RingPtr ramanujan_ring();
/// (x2, x3, y2, y3) with weights (2, 3, 2, 3).
RingPtr chart_ring();

VectorField field_f();
VectorField field_e();
VectorField field_h();
/// R = -f, the Ramanujan vector field.
VectorField field_ramanujan();
/// The quadratic field v on (x2, x3, y2, y3).
VectorField field_v();

/// Halphen field on (t1, t2, t3). With no alpha, the parameters a1, a2, a3
/// are appended to the ring as weight-0 parameter variables.
VectorField field_halphen(const std::optional<std::array<Rational, 3>>& alpha = std::nullopt);
/// The Halphen self-join system on (x1, x2, y1, y2), with the same
/// parameter convention as field_halphen.
VectorField field_halphen_join(const std::optional<std::array<Rational, 3>>& alpha = std::nullopt);

}  // namespace mflab
