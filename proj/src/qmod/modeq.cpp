#include "mflab/modeq.hpp"

#include <algorithm>

#include "mflab/arith.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/matrix.hpp"

namespace mflab {
namespace {

// (y_i argument, g2, g3) in the solver convention.
std::vector<QSeries> solver_point(int d, int i, int order) {
  EisensteinBasis g = eisenstein_basis(order);
  Rational dd(d);
  QSeries y;
  switch (i) {
    case 1:
      y = dd * g.g1.spread(d) - g.g1;
      break;
    case 2:
      y = dd * dd * g.g2.spread(d);
      break;
    default:
      y = dd * dd * dd * g.g3.spread(d);
      break;
  }
  return {y, g.g2, g.g3};
}

MultiPoly build(const RingPtr& ring, const std::vector<std::array<int, 3>>& exps,
                const std::vector<Rational>& coeffs) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    Monomial m;
    for (std::size_t k = 0; k < 3; ++k) m.set(k, exps[j][k]);
    terms.emplace_back(m, coeffs[j]);
  }
  return MultiPoly(ring, std::move(terms));
}

}  // namespace

RingPtr modeq_ring(int i) {
  if (i < 1 || i > 3) throw Error(ErrorCode::kInvalidArgument, "i must be 1, 2 or 3");
  return make_ring({{"y" + std::to_string(i), i}, {"x2", 2}, {"x3", 3}});
}

int default_modeq_order(int d, int i) {
  int m = static_cast<int>(monomial_exponents(d, i).size());
  return std::max(3 * i * static_cast<int>(dedekind_psi(d)), m + 15);
}

std::string modeq_convention(int i) {
  switch (i) {
    case 1:
      return "y1 = d*g1(q^d) - g1(q); chart form uses y1 -> -y1";
    case 2:
      return "y2 = d^2*g2(q^d); chart form identical";
    default:
      return "y3 = d^3*g3(q^d); chart form uses y3 -> -y3";
  }
}

ModularEquation modeq_solve(int d, int i, int order) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "modular equations need d >= 2");
  auto exps = monomial_exponents(d, i);
  std::size_t m = exps.size();
  if (order <= 0) order = default_modeq_order(d, i);
  if (order < static_cast<int>(m) + 10) {
    throw Error(ErrorCode::kPrecisionTooLow, "need N >= m + 10 = " + std::to_string(m + 10));
  }
  auto pt = solver_point(d, i, order);
  // powers of each argument, shared across monomials
  std::vector<std::vector<QSeries>> powers(3);
  for (std::size_t k = 0; k < 3; ++k) {
    int top = 0;
    for (const auto& e : exps) top = std::max(top, e[k]);
    powers[k].push_back(QSeries::constant(1, order));
    for (int e = 1; e <= top; ++e) powers[k].push_back(powers[k].back() * pt[k]);
  }
  RationalMatrix a(static_cast<std::size_t>(order) + 1, m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    QSeries col = powers[0][exps[j][0]] * powers[1][exps[j][1]] * powers[2][exps[j][2]];
    for (int n = 0; n <= order; ++n) a(static_cast<std::size_t>(n), j) = col[n];
  }
  auto kernel = nullspace_rational(a);
  if (kernel.empty()) {
    throw Error(ErrorCode::kPrecisionTooLow, "no relation found at N = " + std::to_string(order));
  }
  if (kernel.size() > 1) {
    throw Error(ErrorCode::kUnderdetermined, "kernel dimension " + std::to_string(kernel.size()) +
                                                 " at N = " + std::to_string(order) + "; increase N");
  }
  ModularEquation q;
  q.d = d;
  q.i = i;
  q.psi = dedekind_psi(d);
  q.order = order;
  q.exponents = exps;
  // exps[0] is the pure power y_i^psi
  const Rational lead = kernel[0][0];
  if (lead == 0) throw Error(ErrorCode::kUnderdetermined, "relation has no pure y power");
  for (auto& c : kernel[0]) q.solver_coefficients.push_back(c / lead);
  for (std::size_t j = 0; j < m; ++j) {
    Rational c = q.solver_coefficients[j];
    if (i != 2 && exps[j][0] % 2) c = -c;
    q.chart_coefficients.push_back(c);
  }
  RingPtr ring = modeq_ring(i);
  q.solver = build(ring, exps, q.solver_coefficients);
  q.chart = build(ring, exps, q.chart_coefficients);
  q.verified_order = 2 * order;
  if (!modeq_residual(q.solver, d, q.verified_order).is_zero()) {
    throw Error(ErrorCode::kPrecisionLoss, "relation fails at doubled precision");
  }
  return q;
}

QSeries modeq_residual(const MultiPoly& q, int d, int order) {
  if (q.is_zero()) return QSeries(order);
  const Ring& r = *q.ring();
  int i = 0;
  for (int k = 1; k <= 3; ++k) {
    if (r.index_of("y" + std::to_string(k))) i = k;
  }
  if (i == 0) throw Error(ErrorCode::kVariableMismatch, "residual needs a y1, y2 or y3 variable");
  auto pt = solver_point(d, i, order);
  std::vector<QSeries> values;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const std::string& name = r[k].name;
    if (name == "y" + std::to_string(i)) {
      values.push_back(pt[0]);
    } else if (name == "x2") {
      values.push_back(pt[1]);
    } else if (name == "x3") {
      values.push_back(pt[2]);
    } else {
      throw Error(ErrorCode::kVariableMismatch, "unexpected variable " + name);
    }
  }
  return evaluate_series(q, values);
}

}  // namespace mflab
