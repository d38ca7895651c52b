#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mflab/vector_field.hpp"

namespace mflab {

enum class DivisorSign { kTMinusS, kSMinusT };

/// Chart on the (t, s) product space used by the self-join construction.
struct ChartSpec {
  std::string name;
  RingPtr source;  // t1, t2, t3, s1, s2, s3 followed by parameters
  RingPtr target;  // new variables followed by the same parameters
  std::vector<RationalFunction> functions;  // one per new variable
  MultiPoly divisor;
  std::vector<std::pair<std::string, Rational>> slice;
  /// Every source variable as a polynomial in the target ring, valid on the
  /// slice.
  std::vector<MultiPoly> section;
};

/// x2 = t2/(t1-s1)^2, x3 = t3/(t1-s1)^3, y2 = s2/(s1-t1)^2, y3 = s3/(s1-t1)^3;
/// slice t1 = 1, s1 = 0.
ChartSpec ramanujan_chart(DivisorSign sign = DivisorSign::kTMinusS);

/// How the fourth Halphen chart coordinate is read.
enum class HalphenY2 {
  kS3MinusS1,  // y2 = (s3 - s1)/(t1 - s1)
  kS3MinusS2,  // y2 = (s3 - s2)/(t1 - s1), the alternative reading
};

/// x1 = (t2-t1)/(s1-t1), x2 = (t3-t1)/(s1-t1), y1 = (s2-s1)/(t1-s1), y2 as
/// selected; slice t1 = 0, s1 = 1. `symbolic` appends a1, a2, a3.
ChartSpec halphen_chart(bool symbolic, HalphenY2 reading = HalphenY2::kS3MinusS1,
                        DivisorSign sign = DivisorSign::kSMinusT);

struct SelfJoinResult {
  VectorField field;
  std::string divisor;  // canonical text of the divisor that was divided out
  std::vector<std::pair<std::string, Rational>> slice;
  bool verified = false;
};

/// Self-join of a field on (t1, t2, t3) through `chart`: W = V(t) + V(s),
/// W(phi_i) divided by the divisor and restricted to the slice, then
/// verified as an identity of rational functions in the source variables.
/// Throws kNotDivisorDivisible or kChartNotInvariant.
SelfJoinResult self_join(const VectorField& v, const ChartSpec& chart);

}  // namespace mflab
