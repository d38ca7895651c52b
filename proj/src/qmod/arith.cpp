#include "mflab/arith.hpp"

#include <algorithm>
#include <numeric>

#include "mflab/error.hpp"

namespace mflab {

Rational bernoulli(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "bernoulli index must be positive");
  int n = 2 * k;
  // B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += binom * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return abs(b[static_cast<std::size_t>(n)]);
}

Integer sigma(int k, long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "sigma needs n >= 1");
  Integer acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    acc += p;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      acc += p;
    }
  }
  return acc;
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "phi needs n >= 1");
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

long dedekind_psi(long d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "psi needs d >= 1");
  long r = d;
  for (long p : prime_factors(d)) r = r / p * (p + 1);
  return r;
}

long cusp_count(long d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "cusp count needs d >= 1");
  long acc = 0;
  for (long a = 1; a <= d; ++a) {
    if (d % a == 0) acc += euler_phi(std::gcd(a, d / a));
  }
  return acc;
}

std::vector<CosetRep> coset_reps(long d, bool primitive) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "coset representatives need d >= 1");
  std::vector<CosetRep> out;
  for (long a = d; a >= 1; --a) {
    if (d % a) continue;
    long b = d / a;
    for (long e = 0; e < b; ++e) {
      if (primitive && std::gcd(std::gcd(a, b), e) != 1) continue;
      out.push_back({a, b, e});
    }
  }
  return out;
}

std::vector<std::array<int, 3>> monomial_exponents(long d, int i) {
  if (i < 1 || i > 3) throw Error(ErrorCode::kInvalidArgument, "i must be 1, 2 or 3");
  int total = i * static_cast<int>(dedekind_psi(d));
  std::vector<std::array<int, 3>> out;
  for (int a1 = total / i; a1 >= 0; --a1) {
    int rest = total - i * a1;
    for (int a2 = rest / 2; a2 >= 0; --a2) {
      int r3 = rest - 2 * a2;
      if (r3 % 3 == 0) out.push_back({a1, a2, r3 / 3});
    }
  }
  return out;
}

}  // namespace mflab
