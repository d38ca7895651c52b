#include <functional>
#include <map>

#include "mflab/arith.hpp"
#include "mflab/builtin_fields.hpp"
#include "mflab/cli.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/error.hpp"
#include "mflab/leafnum.hpp"
#include "mflab/modeq.hpp"
#include "mflab/picard.hpp"
#include "mflab/self_join.hpp"

namespace mflab::cli {

namespace {

using Suite = std::function<void(VerifyReport&, int)>;

void check(VerifyReport& r, const std::string& name, bool ok, Json observed) {
  r.checks[name] = std::move(observed);
  if (!ok) r.failures.push_back(name);
}

VectorField scaled(const VectorField& v, int c) {
  std::vector<MultiPoly> out;
  for (const auto& x : v.components()) out.push_back(x * Rational(c));
  return VectorField(v.ring(), out);
}

void sl2(VerifyReport& r, int) {
  VectorField e = field_e(), f = field_f(), h = field_h();
  auto he = lie_bracket(h, e), hf = lie_bracket(h, f), ef = lie_bracket(e, f);
  check(r, "[h,e]", he == scaled(e, 2), he == scaled(e, 2) ? Json("2e") : to_json(he));
  check(r, "[h,f]", hf == scaled(f, -2), hf == scaled(f, -2) ? Json("-2f") : to_json(hf));
  check(r, "[e,f]", ef == h, ef == h ? Json("h") : to_json(ef));
}

void delta(VerifyReport& r, int) {
  VectorField v = field_v();
  for (const char* text : {"27*x3^2 - x2^3", "27*y3^2 - y2^3"}) {
    try {
      check(r, text, true, to_json(invariance_cofactor(v, parse_poly(text, chart_ring()))));
    } catch (const Error& e) {
      check(r, text, false, e.what());
    }
  }
}

void linearpart(VerifyReport& r, int) {
  std::vector<Rational> zero(4, Rational(0));
  auto cp = characteristic_polynomial(linear_part(field_v(), zero));
  auto expected = parse_poly("(lambda^2 - 5*lambda + 6)*(lambda^2 + 5*lambda + 6)", cp.ring());
  check(r, "characteristic polynomial", cp == expected, to_json(cp));
}

void tangency(VerifyReport& r, int terms) {
  for (int d : {2, 3, 4, 5}) {
    auto minors = tangency_minors(d, terms);
    bool zero = true;
    for (const auto& m : minors) zero = zero && m.is_zero();
    check(r, "d=" + std::to_string(d), zero,
          zero ? Json("six minors vanish through q^" + std::to_string(terms - 2)) : Json("nonzero minor"));
  }
}

void picard(VerifyReport& r, int) {
  auto k = kernel_check();
  check(r, "residual1", k.residual1.is_zero(), to_json(k.residual1));
  check(r, "residual2", k.residual2.is_zero(), to_json(k.residual2));
  check(r, "rank", k.rank == 2, k.rank);
}

void selfjoin(VerifyReport& r, int) {
  auto res = self_join(field_ramanujan(), ramanujan_chart());
  bool same = res.verified && res.field.components() == field_v().components();
  check(r, "ramanujan chart", same, same ? Json("equals v") : to_json(res.field));
  auto hal = self_join(field_halphen(), halphen_chart(true));
  bool ok = hal.verified && hal.field == field_halphen_join();
  check(r, "halphen chart", ok, ok ? Json("equals the Halphen join") : to_json(hal.field));
}

void ramanujan(VerifyReport& r, int terms) {
  bool zero = true;
  for (const auto& s : ramanujan_residuals(eisenstein_basis(terms))) zero = zero && s.is_zero();
  check(r, "Ramanujan system", zero, zero ? Json("residuals vanish to order " + std::to_string(terms - 1))
                                          : Json("nonzero residual"));
}

void modeq(VerifyReport& r, int) {
  for (int i : {1, 2, 3}) {
    std::string name = "Q_{2," + std::to_string(i) + "}";
    try {
      auto q = modeq_solve(2, i);
      check(r, name, true, to_json(q.solver));
    } catch (const Error& e) {
      check(r, name, false, e.what());
    }
  }
}

void arithmetic(VerifyReport& r, int) {
  bool ok = true;
  for (long d = 1; d <= 50; ++d) {
    ok = ok && static_cast<long>(coset_reps(d).size()) == dedekind_psi(d);
  }
  check(r, "|coset_reps(d)| = psi(d), d <= 50", ok, ok);
}

void singular(VerifyReport& r, int) {
  VectorField v = field_v();
  bool ok = true;
  for (int t = 1; t <= 4; ++t) {
    for (int s = 1; s <= 4; ++s) {
      auto p = singular_curve_point(t, s);
      ok = ok && p.has_value();
      if (p) {
        for (std::size_t k = 0; k < 4; ++k) ok = ok && evaluate(v[k], *p) == 0;
      }
    }
  }
  check(r, "v vanishes on the singular curve", ok, ok);
}

void numerics(VerifyReport& r, int) {
  auto p = periods({Complex(0), Complex(4), Complex(0)});
  NumericTolerances tol;
  check(r, "legendre residual (lemniscatic)", p.legendre_residual <= tol.legendre, p.legendre_residual);
  auto [t, s] = point_from_q(0.01, 2);
  auto b = first_integral_B(t, s);
  check(r, "B on V_2 at q = 0.01", std::abs(b.value - 1) <= 1e-6 && std::abs(b.imaginary) <= 1e-9, b.value);
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"tangency", tangency}, {"delta", delta}, {"sl2", sl2}, {"linearpart", linearpart}, {"picard", picard}};
  return table;
}

}  // namespace

Json VerifyReport::to_json() const {
  return Json{{"suite", suite}, {"checks", checks}, {"failures", failures}, {"passed", passed()}};
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"tangency", "delta", "sl2", "linearpart", "picard", "all"};
  return names;
}

VerifyReport verify_suite(const std::string& name, int terms) {
  VerifyReport report;
  report.suite = name;
  if (name != "all") {
    auto it = suites().find(name);
    if (it == suites().end()) throw Error(ErrorCode::kInvalidArgument, "unknown verify suite '" + name + "'");
    it->second(report, terms);
    return report;
  }
  std::vector<std::pair<std::string, Suite>> every(suites().begin(), suites().end());
  every.emplace_back("selfjoin", selfjoin);
  every.emplace_back("ramanujan", ramanujan);
  every.emplace_back("modeq", modeq);
  every.emplace_back("arithmetic", arithmetic);
  every.emplace_back("singular", singular);
  every.emplace_back("numerics", numerics);
  for (const auto& [sub, run] : every) {
    VerifyReport part;
    part.suite = sub;
    run(part, terms);
    report.checks[sub] = part.checks;
    for (const auto& f : part.failures) report.failures.push_back(sub + "/" + f);
  }
  return report;
}

}  // namespace mflab::cli
