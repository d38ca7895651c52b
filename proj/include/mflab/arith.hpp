#pragma once

#include <array>
#include <vector>

#include "mflab/rational.hpp"

namespace mflab {

/// |B_{2k}| (1/6, 1/30, 1/42, ...), computed from the standard recurrence
/// for the Bernoulli numbers.
Rational bernoulli(int k);
Integer sigma(int k, long n);
long euler_phi(long n);
/// d * prod_{p | d} (1 + 1/p).
long dedekind_psi(long d);
/// sum_{a | d} phi(gcd(a, d/a)).
long cusp_count(long d);

struct CosetRep {
  long a;
  long b;
  long e;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};
/// (a, b, e) with ab = d and 0 <= e < b; with `primitive`, only those with
/// gcd(a, b, e) = 1.
std::vector<CosetRep> coset_reps(long d, bool primitive = true);

/// Exponents (a1, a2, a3) with i*a1 + 2*a2 + 3*a3 = i*psi(d), in descending
/// lexicographic order (the pure power of y_i first).
std::vector<std::array<int, 3>> monomial_exponents(long d, int i);

}  // namespace mflab
