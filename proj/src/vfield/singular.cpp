#include "mflab/vector_field.hpp"

namespace mflab {

std::optional<std::vector<Rational>> singular_curve_point(const Rational& t, const Rational& s) {
  if (t == 0 && s == 0) throw Error(ErrorCode::kInvalidArgument, "[0:0] is not a point");
  Rational h = (s + t) / 2;
  if (h == 0) return std::nullopt;
  // [3t^2 : t^3 : 3s^2 : s^3 : h] scaled to y1 = 1
  Rational h2 = h * h;
  Rational h3 = h2 * h;
  return std::vector<Rational>{3 * t * t / h2, t * t * t / h3, 3 * s * s / h2, s * s * s / h3};
}

}  // namespace mflab
