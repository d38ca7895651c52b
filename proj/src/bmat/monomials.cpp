#include "mflab/arith.hpp"
#include "mflab/bmatrix.hpp"

namespace mflab {

MonomialBasis monomials(long d, int i) {
  MonomialBasis basis;
  basis.d = d;
  basis.i = i;
  basis.exponents = monomial_exponents(d, i);
  RingPtr ring = chart_ring();
  // chart ring order is (x2, x3, y2, y3)
  for (const auto& e : basis.exponents) {
    Monomial m;
    m.set(0, e[1]);
    m.set(1, e[2]);
    if (i == 2) m.set(2, e[0]);
    if (i == 3) m.set(3, e[0]);
    basis.seeds.push_back(MultiPoly::monomial(ring, m));
  }
  return basis;
}

}  // namespace mflab
