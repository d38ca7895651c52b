// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "mflab/arith.hpp"
#include "mflab/bmatrix.hpp"
#include "mflab/builtin_fields.hpp"
#include "mflab/cusp.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/isogeny.hpp"
#include "mflab/leafnum.hpp"
#include "mflab/modeq.hpp"
#include "mflab/picard.hpp"
#include "mflab/self_join.hpp"
#include "oracles.hpp"

using namespace mflab;
using mflab::testing::Gen;

namespace {

// Pinned tolerances.
constexpr double kLegendreTol = 1e-9;
constexpr double kLevelSetTol = 1e-6;   // |B - 1| on V_d
constexpr double kRealTol = 1e-9;       // |Im B|
constexpr double kDriftTol = 1e-5;      // |B - 1| along an RK4 trajectory
constexpr double kIsogenyTol = 1e-8;    // relative residual of Q_{2,i} at a numeric point
constexpr double kRk4FactorLo = 12, kRk4FactorHi = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED: " << what << ";";
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget;  // seconds
  std::function<void(Outcome&)> run;
};

VectorField scaled(const VectorField& v, int c) {
  std::vector<MultiPoly> out;
  for (const auto& x : v.components()) out.push_back(x * Rational(c));
  return VectorField(v.ring(), out);
}

MultiPoly chart_poly(const char* text) { return parse_poly(text, chart_ring()); }

std::function<Rational(const Rational&)> rational_lift() {
  return [](const Rational& c) { return c; };
}

void sl2(Outcome& o) {
  VectorField e = field_e(), f = field_f(), h = field_h();
  o.require(lie_bracket(h, e) == scaled(e, 2), "[h,e] = 2e");
  o.require(lie_bracket(h, f) == scaled(f, -2), "[h,f] = -2f");
  o.require(lie_bracket(e, f) == h, "[e,f] = h");
  o.detail << " [h,e]=2e [h,f]=-2f [e,f]=h";
}

void selfjoin(Outcome& o) {
  auto r = self_join(field_ramanujan(), ramanujan_chart());
  o.require(r.verified && r.field == field_v(), "Ramanujan chart reproduces v");
  auto h = self_join(field_halphen(), halphen_chart(true));
  o.require(h.verified && h.field == field_halphen_join(), "symbolic Halphen join");
  Gen g(2018);
  int matched = 0;
  for (int k = 0; k < 5; ++k) {
    std::array<Rational, 3> a{g.rational(), g.rational(), g.rational()};
    auto hr = self_join(field_halphen(a), halphen_chart(false));
    bool ok = hr.verified && hr.field == field_halphen_join(a);
    matched += ok ? 1 : 0;
    o.require(ok, "Halphen join for a random alpha");
  }
  o.detail << " divisor " << r.divisor << "; Halphen symbolic + " << matched << "/5 random alpha";
}

void delta(Outcome& o) {
  VectorField v = field_v();
  for (const char* text : {"27*x3^2 - x2^3", "27*y3^2 - y2^3"}) {
    try {
      o.detail << " cofactor(" << text << ") = " << invariance_cofactor(v, chart_poly(text)).to_string() << ";";
    } catch (const Error& e) {
      o.require(false, std::string(text) + ": " + e.what());
    }
  }
}

void singular(Outcome& o) {
  VectorField v = field_v();
  Gen g(4);
  int checked = 0;
  while (checked < 20) {
    Rational t = g.rational(), s = g.rational();
    if (t + s == 0) continue;
    auto p = singular_curve_point(t, s);
    o.require(p.has_value(), "singular point exists");
    if (!p) break;
    for (std::size_t k = 0; k < 4; ++k) o.require(evaluate(v[k], *p) == 0, "v vanishes");
    ++checked;
  }
  o.detail << " " << checked << " random pairs";
}

void linearpart(Outcome& o) {
  std::vector<Rational> zero(4, Rational(0));
  auto cp = characteristic_polynomial(linear_part(field_v(), zero));
  o.require(cp == parse_poly("(lambda^2 - 5*lambda + 6)*(lambda^2 + 5*lambda + 6)", cp.ring()),
            "characteristic polynomial");
  o.detail << " " << cp.to_string();
}

void ramanujan(Outcome& o) {
  auto res = ramanujan_residuals(eisenstein_basis(200));
  for (const auto& r : res) {
    o.require(r.is_zero(), "residual vanishes");
    o.require(r.order() >= 199, "residual order >= 199");
  }
  o.detail << " residual orders " << res[0].order() << "," << res[1].order() << "," << res[2].order();
}

void tangency(Outcome& o) {
  for (int d : {2, 3, 4, 5}) {
    auto minors = tangency_minors(d, 40);
    bool ok = minors.size() == 6;
    for (const auto& m : minors) ok = ok && m.is_zero() && m.order() >= 38;
    o.require(ok, "six minors vanish through q^38 for d=" + std::to_string(d));
  }
  o.detail << " d=2..5, six minors through q^38";
}

void monomial_counts(Outcome& o) {
  const std::vector<std::size_t> expected{5, 7, 12, 12};
  o.detail << " m_{d,2} =";
  for (int d = 2; d <= 5; ++d) {
    std::size_t m = monomials(d, 2).size();
    o.detail << " " << m;
    o.require(m == expected[static_cast<std::size_t>(d - 2)], "count for d=" + std::to_string(d));
  }
}

void modular_equations(Outcome& o) {
  for (int d : {2, 3}) {
    for (int i : {1, 2, 3}) {
      std::string tag = "Q_{" + std::to_string(d) + "," + std::to_string(i) + "}";
      ModularEquation q;
      try {
        q = modeq_solve(d, i);
      } catch (const Error& e) {
        o.require(false, tag + ": " + e.what());
        continue;
      }
      auto deg = q.solver.weighted_degree();
      o.require(deg && *deg == i * q.psi, tag + " weighted degree");
      bool lead = false;
      for (std::size_t k = 0; k < q.exponents.size(); ++k) {
        if (q.exponents[k] == std::array<int, 3>{static_cast<int>(q.psi), 0, 0}) lead = q.solver_coefficients[k] == 1;
      }
      o.require(lead, tag + " leading coefficient 1");
      o.require(modeq_residual(q.solver, d, 2 * q.order).is_zero(), tag + " residual at doubled precision");
      bool sixth = true;
      for (const auto& c : q.solver_coefficients) sixth = sixth && is_in_z_sixth(c);
      for (const auto& c : q.chart_coefficients) sixth = sixth && is_in_z_sixth(c);
      o.require(sixth, tag + " denominators 2^a 3^b");
      o.detail << " " << tag << ":N=" << q.order << ",m=" << q.exponents.size();
    }
  }
}

void leaf_determinants(Outcome& o) {
  const int order = 60, through = 50;
  for (auto [d, i] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto basis = monomials(d, i);
    if (basis.size() > 8) continue;
    auto leaf = leaf_param(static_cast<int>(d), order);
    std::array<QSeries, 4> pt{leaf.x2, leaf.x3, leaf.y2, leaf.y3};
    std::function<QSeries(const Rational&)> lift = [&](const Rational& c) { return QSeries::constant(c, order); };
    QSeries j = series_det(bmatrix_at(basis, pt, lift));
    bool ok = j.order() >= through;
    for (int n = 0; n <= through && n <= j.order(); ++n) ok = ok && j[static_cast<std::size_t>(n)] == 0;
    o.require(ok, "J_{" + std::to_string(d) + "," + std::to_string(i) + "} through q^50");
    o.detail << " J_{" << d << "," << i << "}(m=" << basis.size() << ")";
  }
  o.detail << " vanish through q^" << through;
}

void cusps(Outcome& o) {
  for (long d : {2L, 3L}) {
    for (long b = 1; b * b < d; ++b) {
      if (d % b) continue;
      long a = d / b;
      for (int i : {1, 2, 3}) {
        auto q = modeq_solve(static_cast<int>(d), i);
        bool zero = true;
        for (const auto& x : multiply(cusp_matrix(d, i, a, b), q.chart_coefficients)) zero = zero && x == 0;
        o.require(zero, "annihilation d=" + std::to_string(d) + " i=" + std::to_string(i));
      }
    }
  }
  o.detail << " annihilated for d=2,3, i=1..3; ranks d=2..5, i=2:";
  const std::vector<std::size_t> expected{1, 3, 3, 3};
  for (auto p : {CuspPoint::kLiteral, CuspPoint::kLeaf}) {
    for (auto f : {FourthPartial::kY3, FourthPartial::kX3}) {
      o.detail << " " << to_string(p) << "/" << to_string(f) << "=";
      for (long d = 2; d <= 5; ++d) {
        std::size_t r = rank_rational(cusp_matrix(d, 2, d, 1, p, f));
        o.detail << r << (d < 5 ? "," : "");
        if (p == CuspPoint::kLiteral && f == FourthPartial::kY3) {
          o.require(r == expected[static_cast<std::size_t>(d - 2)], "documented rank for d=" + std::to_string(d));
        }
      }
    }
  }
  o.detail << " (documented: literal/y3)";
}

void isogenies(Outcome& o) {
  std::vector<ModularEquation> eqs{modeq_solve(2, 1), modeq_solve(2, 2), modeq_solve(2, 3)};
  double worst = 0;
  int curves = 0;
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, -2}, {3, 5}, {-2, 7}, {make_rational(1, 2), 3}}) {
    auto p = isogeny_point(mflab::testing::two_isogeny_input(a, b));
    auto pn = isogeny_point(mflab::testing::two_isogeny_input_numeric(a, b));
    for (const auto& q : eqs) {
      Rational y = q.i == 1 ? Rational(1) : p[q.i == 2 ? 2 : 3];
      std::vector<Rational> at{y, p[0], p[1]};
      o.require(evaluate(q.chart, at) == 0, "exact Q_{2," + std::to_string(q.i) + "} vanishes");
      for (const auto& x : coefficient_check(2, q.i, p, q.chart_coefficients, rational_lift())) {
        o.require(x == 0, "coefficient_check is zero");
      }
      // numeric residual relative to the size of the terms
      Complex yn = q.i == 1 ? Complex(1) : pn[q.i == 2 ? 2 : 3];
      std::array<Complex, 3> vals{yn, pn[0], pn[1]};
      Complex sum = 0;
      double size = 0;
      for (const auto& [m, c] : q.chart.terms()) {
        Complex term = c.get_d();
        for (std::size_t k = 0; k < 3; ++k) term *= std::pow(vals[k], static_cast<int>(m[k]));
        sum += term;
        size += std::abs(term);
      }
      worst = std::max(worst, std::abs(sum) / size);
    }
    ++curves;
  }
  o.require(worst <= kIsogenyTol, "numeric residual");
  o.detail << " " << curves << " rational 2-isogenies exact; numeric relative residual " << worst;
}

void numerics(Outcome& o) {
  Gen g(100);
  double legendre = 0;
  for (int k = 0; k < 100;) {
    std::array<Complex, 3> t{g.rational(10).get_d(), g.rational(10).get_d(), g.rational(10).get_d()};
    if (std::abs(27.0 * t[2] * t[2] - t[1] * t[1] * t[1]) < 1e-6) continue;
    legendre = std::max(legendre, periods(t).legendre_residual);
    ++k;
  }
  o.require(legendre <= kLegendreTol, "Legendre residual");

  double level = 0, imag = 0;
  for (int d : {1, 2, 3}) {
    for (double q0 : {0.005, 0.01, 0.02}) {
      auto [t, s] = point_from_q(q0, d);
      auto b = first_integral_B(t, s);
      level = std::max(level, std::abs(b.value - 1));
      imag = std::max(imag, std::abs(b.imaginary));
    }
  }
  o.require(level <= kLevelSetTol, "B = 1 on V_d");
  o.require(imag <= kRealTol, "B real");

  VectorField v = field_v();
  auto leaf = leaf_param(2, 80);
  std::vector<Complex> start;
  for (const auto& s : leaf.point()) start.emplace_back(s.evaluate(0.01));
  auto traj = rk4_integrate(v, start, 1.0, 1e-3, 50);
  o.require(!traj.blew_up, "trajectory stays finite");
  double drift = 0;
  for (const auto& x : traj.points) {
    auto [t, s] = slice_lift({x[0], x[1], x[2], x[3]});
    drift = std::max(drift, std::abs(first_integral_B(t, s).value - 1));
  }
  o.require(drift <= kDriftTol, "B drift");

  auto reference = rk4_integrate(v, start, 1.0, 1e-4).points.back();
  auto err = [&](double h) {
    auto x = rk4_integrate(v, start, 1.0, h).points.back();
    double e = 0;
    for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - reference[i]));
    return e;
  };
  double factor = err(0.0125) / err(0.00625);
  o.require(factor >= kRk4FactorLo && factor <= kRk4FactorHi, "RK4 order-4 factor");
  o.detail << " legendre " << legendre << "; |B-1| on V_d " << level << "; |Im B| " << imag << "; drift " << drift
           << "; RK4 factor " << factor;
}

void picard(Outcome& o) {
  auto k = kernel_check();
  o.require(k.residual1.is_zero(), "residual1 = 0");
  o.require(k.residual2.is_zero(), "residual2 = 0");
  o.require(k.rank == 2, "rank 2");
  o.detail << " residuals " << k.residual1.to_string() << ", " << k.residual2.to_string() << "; rank " << k.rank;
}

void arithmetic(Outcome& o) {
  for (long d = 1; d <= 50; ++d) {
    o.require(static_cast<long>(coset_reps(d).size()) == dedekind_psi(d), "|coset_reps| = psi for d=" + std::to_string(d));
    long line = 0;
    o.require(cusp_count(d) == mflab::testing::brute_cusp_classes(d, &line), "cusp count for d=" + std::to_string(d));
  }
  o.detail << " d = 1..50";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sl2 identities", 1, sl2},
      {2, "self-join reproduction", 10, selfjoin},
      {3, "discriminant invariance", 1, delta},
      {4, "singular curve", 10, singular},
      {5, "linear part at the origin", 10, linearpart},
      {6, "Eisenstein basis solves the Ramanujan system", 5, ramanujan},
      {7, "tangency of the leaves", 60, tangency},
      {8, "monomial counts", 10, monomial_counts},
      {9, "modular equations", 300, modular_equations},
      {10, "J vanishes on the leaves", 600, leaf_determinants},
      {11, "cusp identity and rank report", 60, cusps},
      {12, "isogenies land on S0(2)", 60, isogenies},
      {13, "periods and the first integral B", 120, numerics},
      {14, "Picard kernel identity", 5, picard},
      {15, "coset and cusp counts", 10, arithmetic},
  };
  std::printf("tolerances: legendre %.0e, |B-1| %.0e, |Im B| %.0e, drift %.0e, isogeny %.0e, RK4 factor [%g, %g]\n",
              kLegendreTol, kLevelSetTol, kRealTol, kDriftTol, kIsogenyTol, kRk4FactorLo, kRk4FactorHi);
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.budget, "time budget");
    if (!o.pass) ++failed;
    std::printf("%s %2d %s (%.3f s of %g s):%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
