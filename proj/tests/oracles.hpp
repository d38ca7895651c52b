#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mflab/isogeny.hpp"
#include "mflab/multipoly.hpp"

namespace mflab::testing {

// Classical 2-isogeny y^2 = x^3 + a x^2 + b x  ->  Y^2 = X^3 - 2a X^2 + (a^2 - 4b) X,
// with both curves moved to the form y^2 = 4x^3 - t2 x - t3.
struct TwoIsogeny {
  Rational t2, t3, s2, s3;  // unscaled target
};

inline TwoIsogeny two_isogeny(const Rational& a, const Rational& b) {
  auto model = [](const Rational& p, const Rational& q) {
    // x -> u - p/3 gives u^3 + (q - p^2/3) u + (2p^3/27 - pq/3); then 4*(...)
    Rational c1 = q - p * p / 3;
    Rational c0 = 2 * p * p * p / 27 - p * q / 3;
    return std::array<Rational, 2>{-4 * c1, -4 * c0};
  };
  auto src = model(a, b);
  auto dst = model(-2 * a, a * a - 4 * b);
  return {src[0], src[1], dst[0], dst[1]};
}

// Target rescaled by lambda = 1/sqrt(2) so that k = 1, and k' = -a/6.
inline IsogenyInput<Rational> two_isogeny_input(const Rational& a, const Rational& b) {
  TwoIsogeny iso = two_isogeny(a, b);
  return {iso.t2, iso.t3, iso.s2 / 4, iso.s3 / 8, Rational(1), -a / 6};
}

// Unscaled target; k = 1/sqrt(2), k' = -sqrt(2) a / 6.
inline IsogenyInput<std::complex<double>> two_isogeny_input_numeric(const Rational& a, const Rational& b) {
  TwoIsogeny iso = two_isogeny(a, b);
  double r2 = std::sqrt(2.0);
  return {iso.t2.get_d(), iso.t3.get_d(), iso.s2.get_d(), iso.s3.get_d(), 1 / r2, -r2 * a.get_d() / 6};
}

// Oracle: cusps of Gamma0(n) as orbits of +-[[1,k],[0,1]] acting on the
// projective line over Z/n, i.e. bottom rows (c:d) up to units, with
// (c, d) -> (c, d + k c).
inline long brute_cusp_classes(long n, long* line_size) {
  std::vector<long> units;
  for (long u = 1; u <= n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u % n);
  }
  auto canon = [&](long c, long d) {
    std::pair<long, long> best{n, n};
    for (long u : units) best = std::min(best, std::pair<long, long>{c * u % n, d * u % n});
    return best;
  };
  std::set<std::pair<long, long>> points;
  for (long c = 0; c < n; ++c)
    for (long d = 0; d < n; ++d)
      if (std::gcd(std::gcd(c, d), n) == 1) points.insert(canon(c, d));
  if (n == 1) points.insert({0, 0});
  *line_size = static_cast<long>(points.size());
  std::map<std::pair<long, long>, bool> seen;
  long orbits = 0;
  for (const auto& p : points) {
    if (seen[p]) continue;
    ++orbits;
    std::vector<std::pair<long, long>> stack{p};
    while (!stack.empty()) {
      auto [c, d] = stack.back();
      stack.pop_back();
      if (seen[{c, d}]) continue;
      seen[{c, d}] = true;
      stack.push_back(canon(c, (d + c) % std::max(n, 1L)));
    }
  }
  return orbits;
}

}  // namespace mflab::testing
