
#include "doctest.h"
#include "mflab/arith.hpp"
#include "mflab/builtin_fields.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/modeq.hpp"
#include "oracles.hpp"

using namespace mflab;
using mflab::testing::brute_cusp_classes;

namespace {

bool squarefree(long n) {
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

bool only_2_3_denominators(const MultiPoly& p) {
  for (const auto& t : p.terms()) {
    if (!is_in_z_sixth(t.second)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("arithmetic functions") {
  CHECK(bernoulli(1) == make_rational(1, 6));
  CHECK(bernoulli(2) == make_rational(1, 30));
  CHECK(bernoulli(3) == make_rational(1, 42));
  CHECK(bernoulli(6) == make_rational(691, 2730));
  CHECK(sigma(1, 6) == 12);
  CHECK(euler_phi(1) == 1);
  CHECK(dedekind_psi(1) == 1);
  CHECK(dedekind_psi(4) == 6);
  CHECK(dedekind_psi(6) == 12);
  CHECK(cusp_count(1) == 1);
  CHECK(cusp_count(4) == 3);
  CHECK(cusp_count(6) == 4);
  CHECK(coset_reps(2) == std::vector<CosetRep>{{2, 1, 0}, {1, 2, 0}, {1, 2, 1}});
  CHECK(coset_reps(1) == std::vector<CosetRep>{{1, 1, 0}});
  CHECK(coset_reps(4).size() == 6);
  CHECK(coset_reps(4, false).size() == 7);
}

TEST_CASE("coset and cusp counts against enumeration, d <= 50") {
  for (long d = 1; d <= 50; ++d) {
    long psi = dedekind_psi(d);
    CHECK(static_cast<long>(coset_reps(d).size()) == psi);
    Integer s1 = sigma(1, d);
    CHECK(Integer(static_cast<long>(coset_reps(d, false).size())) == s1);
    CHECK((Integer(psi) == s1) == squarefree(d));
    long line = 0;
    CHECK(cusp_count(d) == brute_cusp_classes(d, &line));
    CHECK(line == psi);
  }
}

TEST_CASE("q-series arithmetic") {
  QSeries a(std::vector<Rational>{1, 2, 3, 4});
  QSeries b = a.inverse();
  CHECK(a * b == QSeries::constant(1, 3));
  CHECK(a.spread(2) == QSeries(std::vector<Rational>{1, 0, 2, 0}));
  CHECK(a.theta() == QSeries(std::vector<Rational>{0, 2, 6, 12}));
  CHECK((a * QSeries::q(3)).shift_down(1) == a.truncated(2));
  CHECK_THROWS_AS(QSeries::q(3).inverse(), Error);
  CHECK_THROWS_AS(a.shift_down(1), Error);
  CHECK((a + QSeries(1)).order() == 1);
  CHECK(QSeries(std::vector<Rational>{1, 0, make_rational(-1, 2)}).to_string() == "1 + -1/2*q^2 + O(q^3)");
}

TEST_CASE("Eisenstein series and the Ramanujan system") {
  auto e2 = eisenstein(2, 3);
  auto e4 = eisenstein(4, 3);
  auto e6 = eisenstein(6, 3);
  CHECK(e2.coeffs() == std::vector<Rational>{1, -24, -72, -96});
  CHECK(e4.coeffs() == std::vector<Rational>{1, 240, 2160, 6720});
  CHECK(e6.coeffs() == std::vector<Rational>{1, -504, -16632, -122976});
  for (const auto& r : ramanujan_residuals(eisenstein_basis(60))) CHECK(r.is_zero());
  // a perturbed basis fails
  auto g = eisenstein_basis(20);
  g.g2[3] += 1;
  bool all_zero = true;
  for (const auto& r : ramanujan_residuals(g)) all_zero = all_zero && r.is_zero();
  CHECK_FALSE(all_zero);
}

TEST_CASE("leaf parametrization constant terms are the cusp values") {
  for (int d = 2; d <= 12; ++d) {
    auto p = leaf_param(d, 4);
    Rational r(d);
    Rational u = 1 - r;
    CHECK(p.x2[0] == 12 / (u * u));
    CHECK(p.x3[0] == 8 / (u * u * u));
    CHECK(p.y2[0] == 12 * r * r / (u * u));
    CHECK(p.y3[0] == -8 * r * r * r / (u * u * u));
  }
  auto p2 = leaf_param(2, 3);
  CHECK(p2.x2[0] == 12);
  CHECK(p2.x3[0] == -8);
  CHECK(p2.y2[0] == 48);
  CHECK(p2.y3[0] == 64);
  CHECK(p2.x2[1] == 2304);
  CHECK(p2.x3[1] == 4608);
  CHECK(p2.y2[1] == -2304);
  CHECK(p2.y3[1] == -4608);
  auto p3 = leaf_param(3, 2);
  CHECK(p3.point()[0][0] == 3);
  CHECK(p3.point()[1][0] == -1);
  CHECK(p3.point()[2][0] == 27);
  CHECK(p3.point()[3][0] == 27);
  CHECK_THROWS_AS(leaf_param(1, 10), Error);
}

TEST_CASE("the leaf is tangent to v") {
  for (int d : {2, 3}) {
    auto minors = tangency_minors(d, 40);
    REQUIRE(minors.size() == 6);
    for (const auto& m : minors) {
      CHECK(m.order() == 38);
      CHECK(m.is_zero());
    }
  }
  auto p = leaf_param(2, 20).point();
  for (const auto& m : minors_2x4(p, p, 18)) CHECK(m.is_zero());
  // a wrong leaf (y-block from level 3) is not tangent
  auto q = leaf_param(3, 20);
  auto wrong = leaf_param(2, 20).point();
  wrong[2] = q.y2;
  wrong[3] = q.y3;
  std::vector<QSeries> dp;
  for (const auto& s : wrong) dp.push_back(s.theta());
  bool all_zero = true;
  for (const auto& m : minors_2x4(evaluate_field(field_v(), wrong), dp, 18)) all_zero = all_zero && m.is_zero();
  CHECK_FALSE(all_zero);
}

TEST_CASE("modular equations for d = 2") {
  auto q21 = modeq_solve(2, 1);
  auto r1 = modeq_ring(1);
  CHECK(q21.exponents.size() == 3);
  CHECK(q21.solver == parse_poly("y1^3 - 1/16*y1*x2 - 1/32*x3", r1));
  CHECK(q21.chart == parse_poly("-y1^3 + 1/16*y1*x2 - 1/32*x3", r1));
  auto q22 = modeq_solve(2, 2, 30);
  auto r2 = modeq_ring(2);
  CHECK(q22.exponents.size() == 5);
  CHECK(q22.exponents[0] == std::array<int, 3>{3, 0, 0});
  CHECK(q22.solver == parse_poly("y2^3 - 9/2*y2^2*x2 + 33/16*y2*x2^2 + 121/16*x2^3 - 3375/16*x3^2", r2));
  CHECK(modeq_residual(q22.solver, 2, 60).is_zero());
  CHECK_FALSE(modeq_residual(parse_poly("y2", r2), 2, 10).is_zero());
  CHECK(modeq_residual(MultiPoly(r2), 2, 10).is_zero());
  CHECK_THROWS_AS(modeq_solve(2, 2, 5), Error);
}

TEST_CASE("modular equations are homogeneous with Z[1/6] coefficients") {
  for (int d : {2, 3}) {
    for (int i : {1, 2, 3}) {
      auto q = modeq_solve(d, i);
      CHECK(q.solver.weighted_degree() == i * q.psi);
      CHECK(q.chart.weighted_degree() == i * q.psi);
      CHECK(q.solver_coefficients[0] == 1);
      CHECK(only_2_3_denominators(q.solver));
      CHECK(modeq_residual(q.solver, d, q.verified_order).is_zero());
    }
  }
}
