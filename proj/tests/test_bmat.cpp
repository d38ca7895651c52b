#include "doctest.h"
#include "generators.hpp"
#include "mflab/arith.hpp"
#include "mflab/bmatrix.hpp"
#include "mflab/cusp.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/isogeny.hpp"
#include "mflab/modeq.hpp"
#include "oracles.hpp"

using namespace mflab;
using mflab::testing::Gen;

namespace {

// Oracle: coin-change count of i*a1 + 2*a2 + 3*a3 = n.
long coin_count(int i, int n) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int coin : {i, 2, 3}) {
    for (int s = coin; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - coin)];
  }
  return ways[static_cast<std::size_t>(n)];
}

std::function<Rational(const Rational&)> rational_lift() {
  return [](const Rational& c) { return c; };
}

Rational eval_chart(const ModularEquation& q, const std::array<Rational, 4>& p) {
  // ring (y_i, x2, x3); y1 is 1 in the chart
  Rational y = q.i == 1 ? Rational(1) : p[q.i == 2 ? 2 : 3];
  std::vector<Rational> at{y, p[0], p[1]};
  return evaluate(q.chart, at);
}

}  // namespace

TEST_CASE("monomial counts") {
  for (long d = 1; d <= 20; ++d) {
    for (int i = 1; i <= 3; ++i) {
      CHECK(static_cast<long>(monomials(d, i).size()) == coin_count(i, i * static_cast<int>(dedekind_psi(d))));
    }
  }
  CHECK(monomials(2, 2).size() == 5);
  CHECK(monomials(3, 2).size() == 7);
  CHECK(monomials(4, 2).size() == 12);
  CHECK(monomials(5, 2).size() == 12);
  auto b11 = monomials(1, 1);
  REQUIRE(b11.size() == 1);
  CHECK(b11.exponents[0] == std::array<int, 3>{1, 0, 0});
  CHECK(b11.seeds[0] == MultiPoly::constant(chart_ring(), 1));
}

TEST_CASE("B matrix structure") {
  PolyMatrix b = bmatrix(2, 2);
  auto r = chart_ring();
  REQUIRE(b.rows() == 5);
  CHECK(b(0, 0) == parse_poly("y2^3", r));
  CHECK(b(1, 0) == parse_poly("3*y2^2", r) * field_v().component("y2"));
  for (std::size_t row = 0; row < b.rows(); ++row) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      for (const auto& t : b(row, c).terms()) CHECK(is_in_z_sixth(t.second));
      if (row + 1 < b.rows()) CHECK(b(row + 1, c) == apply_derivation(field_v(), b(row, c)));
    }
  }
  CHECK(bmatrix(1, 1)(0, 0) == MultiPoly::constant(r, 1));
  CHECK(jdet(1, 1) == MultiPoly::constant(r, 1));
  CHECK_THROWS_AS(jdet(3, 3), Error);
}

TEST_CASE("flow-jet evaluation agrees with the symbolic matrix") {
  Gen g(31);
  for (auto [d, i] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    PolyMatrix b = bmatrix(d, i);
    std::array<Rational, 4> p{g.rational(), g.rational(), g.rational(), g.rational()};
    RationalMatrix at = bmatrix_at(monomials(d, i), p, rational_lift());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) CHECK(at(r, c) == evaluate(b(r, c), p));
  }
}

TEST_CASE("series determinant") {
  Gen g(32);
  RationalMatrix m = g.matrix(5, 5);
  Matrix<QSeries> s = m.map([](const Rational& x) { return QSeries::constant(x, 3); });
  CHECK(series_det(s)[0] == bareiss_det(m));
}

TEST_CASE("J vanishes along the leaf") {
  for (auto [d, i] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    auto leaf = leaf_param(static_cast<int>(d), 40);
    std::array<QSeries, 4> pt{leaf.x2, leaf.x3, leaf.y2, leaf.y3};
    std::function<QSeries(const Rational&)> lift = [](const Rational& c) { return QSeries::constant(c, 40); };
    QSeries j = series_det(bmatrix_at(monomials(d, i), pt, lift));
    CHECK(j.is_zero());
    // the symbolic determinant agrees
    std::vector<QSeries> pv(pt.begin(), pt.end());
    CHECK(evaluate_series(jdet(d, i), pv).is_zero());
  }
  // off the leaf J is not zero
  auto leaf = leaf_param(2, 20);
  std::array<QSeries, 4> off{leaf.x2, leaf.x3, leaf.y2 + QSeries::constant(1, 20), leaf.y3};
  std::function<QSeries(const Rational&)> lift = [](const Rational& c) { return QSeries::constant(c, 20); };
  CHECK_FALSE(series_det(bmatrix_at(monomials(2, 2), off, lift)).is_zero());
}

TEST_CASE("isogeny point input validation") {
  IsogenyInput<Rational> in{4, 1, 4, 1, 1, 0};
  CHECK_THROWS_AS(isogeny_point(in), Error);
  in.kp = 1;
  in.t2 = 3;
  in.t3 = 1;  // 27 - 27 = 0
  CHECK_THROWS_AS(isogeny_point(in), Error);
  in = {2, 3, 5, 7, 2, 3};
  auto p = isogeny_point(in, IsogenyFormula::kPrinted);
  CHECK(p == std::array<Rational, 4>{make_rational(8, 9), make_rational(24, 27), make_rational(20, 9),
                                     make_rational(-56, 27)});
  auto q = isogeny_point(in);
  CHECK(q[0] == make_rational(2, 36));
}

TEST_CASE("2-isogenies land on S0(2)") {
  std::vector<ModularEquation> eqs{modeq_solve(2, 1), modeq_solve(2, 2), modeq_solve(2, 3)};
  Gen g(33);
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, -2}, {3, 5}, {-2, 7}, {make_rational(1, 2), 3}}) {
    auto p = isogeny_point(mflab::testing::two_isogeny_input(a, b));
    for (const auto& q : eqs) {
      CHECK(eval_chart(q, p) == 0);
      auto res = coefficient_check(2, q.i, p, q.chart_coefficients, rational_lift());
      for (const auto& x : res) CHECK(x == 0);
    }
    // with k = 1 the two normalizations agree
    CHECK(isogeny_point(mflab::testing::two_isogeny_input(a, b), IsogenyFormula::kPrinted) == p);
    // numeric, unscaled target
    auto pn = isogeny_point(mflab::testing::two_isogeny_input_numeric(a, b));
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(pn[k] - p[k].get_d()) <= 1e-9 * std::abs(p[k].get_d()));
    // random coefficients do not annihilate B(p)
    std::vector<Rational> c;
    for (std::size_t k = 0; k < eqs[1].chart_coefficients.size(); ++k) c.push_back(g.rational());
    auto res = coefficient_check(2, 2, p, c, rational_lift());
    CHECK(std::any_of(res.begin(), res.end(), [](const Rational& x) { return x != 0; }));
    std::vector<Rational> zero(c.size(), Rational(0));
    for (const auto& x : coefficient_check(2, 2, p, zero, rational_lift())) CHECK(x == 0);
  }
}

TEST_CASE("cusp matrix") {
  CHECK(rank_rational(cusp_matrix(2, 2, 2, 1)) == 1);
  CHECK_THROWS_AS(cusp_matrix(4, 2, 2, 2), Error);
  CHECK_THROWS_AS(cusp_matrix(6, 2, 2, 3), Error);
  for (int d : {2, 3}) {
    for (int i : {1, 2, 3}) {
      auto q = modeq_solve(d, i);
      RationalMatrix m = cusp_matrix(d, i, d, 1);
      for (const auto& x : multiply(m, q.chart_coefficients)) CHECK(x == 0);
    }
  }
  // at the cusp itself every row of B after the first vanishes
  auto p = cusp_point(Rational(2), CuspPoint::kLeaf);
  RationalMatrix raw = bmatrix_at(monomials(2, 2), p, rational_lift());
  CHECK(rank_rational(raw) == 1);
}
