#pragma once

#include <random>
#include <vector>

#include "mflab/matrix.hpp"
#include "mflab/multipoly.hpp"

namespace mflab::testing {

// Small hand-rolled generators; every test seeds its own engine.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 9) {
    int num = integer(-span, span);
    int den = integer(1, span);
    return make_rational(num, den);
  }

  Monomial monomial(std::size_t vars, int max_exp) {
    Monomial m;
    for (std::size_t i = 0; i < vars; ++i) m.set(i, integer(0, max_exp));
    return m;
  }

  MultiPoly poly(const RingPtr& ring, int max_terms, int max_exp) {
    std::vector<MultiPoly::Term> terms;
    int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) terms.emplace_back(monomial(ring->size(), max_exp), rational());
    return MultiPoly(ring, std::move(terms));
  }

  MultiPoly nonzero_poly(const RingPtr& ring, int max_terms, int max_exp) {
    for (;;) {
      MultiPoly p = poly(ring, max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  RationalMatrix matrix(std::size_t rows, std::size_t cols, int span = 5) {
    RationalMatrix m(rows, cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(span);
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace mflab::testing
