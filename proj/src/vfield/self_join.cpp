#include "mflab/self_join.hpp"

namespace mflab {
namespace {

std::vector<Variable> with_params(std::vector<Variable> vars, bool symbolic) {
  if (symbolic) {
    for (const char* a : {"a1", "a2", "a3"}) vars.push_back({a, 0});
  }
  return vars;
}

RationalFunction ratio(const RingPtr& ring, const char* num, const char* den) {
  return RationalFunction(parse_poly(num, ring), parse_poly(den, ring));
}

// Copies of V on the t-block and on the s-block of `source`.
VectorField doubled(const VectorField& v, const RingPtr& source) {
  if (v.dimension() != 3) throw Error(ErrorCode::kShapeMismatch, "self-join needs a field in three variables");
  const Ring& vr = *v.ring();
  std::vector<MultiPoly> to_t;
  std::vector<MultiPoly> to_s;
  for (std::size_t i = 0; i < vr.size(); ++i) {
    if (i < 3) {
      to_t.push_back(MultiPoly::variable(source, i));
      to_s.push_back(MultiPoly::variable(source, i + 3));
    } else {
      to_t.push_back(MultiPoly::variable(source, vr[i].name));
      to_s.push_back(to_t.back());
    }
  }
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < 3; ++i) comps.push_back(compose(v[i], to_t, source));
  for (std::size_t i = 0; i < 3; ++i) comps.push_back(compose(v[i], to_s, source));
  return VectorField(source, std::move(comps));
}

}  // namespace

ChartSpec ramanujan_chart(DivisorSign sign) {
  ChartSpec c;
  c.name = "ramanujan";
  c.source = make_ring({{"t1", 1}, {"t2", 2}, {"t3", 3}, {"s1", 1}, {"s2", 2}, {"s3", 3}});
  c.target = make_ring({{"x2", 2}, {"x3", 3}, {"y2", 2}, {"y3", 3}});
  const auto& s = c.source;
  c.functions = {ratio(s, "t2", "(t1 - s1)^2"), ratio(s, "t3", "(t1 - s1)^3"),
                 ratio(s, "s2", "(s1 - t1)^2"), ratio(s, "s3", "(s1 - t1)^3")};
  c.divisor = parse_poly(sign == DivisorSign::kTMinusS ? "t1 - s1" : "s1 - t1", s);
  c.slice = {{"t1", Rational(1)}, {"s1", Rational(0)}};
  const auto& t = c.target;
  c.section = {MultiPoly::constant(t, 1), parse_poly("x2", t), parse_poly("x3", t),
               MultiPoly(t),              parse_poly("y2", t), parse_poly("-y3", t)};
  return c;
}

ChartSpec halphen_chart(bool symbolic, HalphenY2 reading, DivisorSign sign) {
  ChartSpec c;
  c.name = reading == HalphenY2::kS3MinusS1 ? "halphen" : "halphen-literal";
  c.source = make_ring(with_params(
      {{"t1", 1}, {"t2", 1}, {"t3", 1}, {"s1", 1}, {"s2", 1}, {"s3", 1}}, symbolic));
  c.target = make_ring(with_params({{"x1", 0}, {"x2", 0}, {"y1", 0}, {"y2", 0}}, symbolic));
  const auto& s = c.source;
  c.functions = {ratio(s, "t2 - t1", "s1 - t1"), ratio(s, "t3 - t1", "s1 - t1"),
                 ratio(s, "s2 - s1", "t1 - s1"),
                 reading == HalphenY2::kS3MinusS1 ? ratio(s, "s3 - s1", "t1 - s1")
                                                  : ratio(s, "s3 - s2", "t1 - s1")};
  c.divisor = parse_poly(sign == DivisorSign::kSMinusT ? "s1 - t1" : "t1 - s1", s);
  c.slice = {{"t1", Rational(0)}, {"s1", Rational(1)}};
  const auto& t = c.target;
  c.section = {MultiPoly(t),
               parse_poly("x1", t),
               parse_poly("x2", t),
               MultiPoly::constant(t, 1),
               parse_poly("1 - y1", t),
               parse_poly(reading == HalphenY2::kS3MinusS1 ? "1 - y2" : "1 - y1 - y2", t)};
  if (symbolic) {
    for (const char* a : {"a1", "a2", "a3"}) c.section.push_back(MultiPoly::variable(t, a));
  }
  return c;
}

SelfJoinResult self_join(const VectorField& v, const ChartSpec& chart) {
  VectorField w = doubled(v, chart.source);
  const RingPtr& target = chart.target;
  std::size_t n = chart.functions.size();

  // the chart functions, with parameters passed through, as an assignment
  // for the verification step
  std::vector<RationalFunction> assignment = chart.functions;
  for (std::size_t i = n; i < target->size(); ++i) {
    assignment.emplace_back(MultiPoly::variable(chart.source, (*target)[i].name));
  }

  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    RationalFunction d = apply_derivation(w, chart.functions[i]);
    RationalFunction pre(d.num(), d.den() * chart.divisor);
    MultiPoly num = compose(pre.num(), chart.section, target);
    MultiPoly den = compose(pre.den(), chart.section, target);
    if (den.is_zero()) {
      throw Error(ErrorCode::kNotDivisorDivisible, "divisor vanishes on the slice");
    }
    auto q = divide_exact(num, den);
    if (!q) {
      throw Error(ErrorCode::kNotDivisorDivisible,
                  "derivative of " + (*target)[i].name + " is not a polynomial on the slice");
    }
    RationalFunction back = substitute(*q, assignment);
    if (!(back == pre)) {
      throw Error(ErrorCode::kChartNotInvariant,
                  "chart is not invariant: component " + (*target)[i].name + " depends on the slice");
    }
    comps.push_back(std::move(*q));
  }
  SelfJoinResult out;
  out.field = VectorField(target, std::move(comps));
  out.divisor = chart.divisor.to_string();
  out.slice = chart.slice;
  out.verified = true;
  return out;
}

}  // namespace mflab
