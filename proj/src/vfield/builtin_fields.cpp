#include "mflab/builtin_fields.hpp"

namespace mflab {
namespace {

std::vector<MultiPoly> parse_all(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

RingPtr halphen_ring(bool symbolic, std::vector<Variable> state) {
  if (symbolic) {
    state.push_back({"a1", 0});
    state.push_back({"a2", 0});
    state.push_back({"a3", 0});
  }
  return make_ring(std::move(state));
}

// Substitutes numeric alpha into a field built over the symbolic ring.
VectorField specialize(const VectorField& sym, const std::array<Rational, 3>& alpha,
                       std::vector<Variable> state) {
  RingPtr ring = make_ring(std::move(state));
  std::vector<MultiPoly> repl;
  for (std::size_t i = 0; i < ring->size(); ++i) repl.push_back(MultiPoly::variable(ring, i));
  for (const auto& a : alpha) repl.push_back(MultiPoly::constant(ring, a));
  std::vector<MultiPoly> comps;
  for (const auto& c : sym.components()) comps.push_back(compose(c, repl, ring));
  return VectorField(ring, std::move(comps));
}

}  // namespace

RingPtr ramanujan_ring() {
  static const RingPtr ring = make_ring({{"t1", 1}, {"t2", 2}, {"t3", 3}});
  return ring;
}

RingPtr chart_ring() {
  static const RingPtr ring = make_ring({{"x2", 2}, {"x3", 3}, {"y2", 2}, {"y3", 3}});
  return ring;
}

VectorField field_f() {
  auto r = ramanujan_ring();
  return VectorField(r, parse_all(r, {"-(t1^2 - 1/12*t2)", "-(4*t1*t2 - 6*t3)", "-(6*t1*t3 - 1/3*t2^2)"}));
}

VectorField field_e() {
  auto r = ramanujan_ring();
  return VectorField(r, parse_all(r, {"1", "0", "0"}));
}

VectorField field_h() {
  auto r = ramanujan_ring();
  return VectorField(r, parse_all(r, {"-2*t1", "-4*t2", "-6*t3"}));
}

VectorField field_ramanujan() { return -field_f(); }

VectorField field_v() {
  auto r = chart_ring();
  return VectorField(r, parse_all(r, {
                            "2*x2 - 6*x3 + 1/6*(x2 - y2)*x2",
                            "3*x3 - 1/3*x2^2 + 1/4*(x2 - y2)*x3",
                            "-(2*y2 - 6*y3 + 1/6*(y2 - x2)*y2)",
                            "-(3*y3 - 1/3*y2^2 + 1/4*(y2 - x2)*y3)",
                        }));
}

VectorField field_halphen(const std::optional<std::array<Rational, 3>>& alpha) {
  std::vector<Variable> state{{"t1", 1}, {"t2", 1}, {"t3", 1}};
  auto r = halphen_ring(true, state);
  VectorField sym(r, parse_all(r, {
                         "(1 - a1)*(t1*t2 + t1*t3 - t2*t3) + a1*t1^2",
                         "(1 - a2)*(t2*t1 + t2*t3 - t1*t3) + a2*t2^2",
                         "(1 - a3)*(t3*t1 + t3*t2 - t1*t2) + a3*t3^2",
                     }));
  if (!alpha) return sym;
  return specialize(sym, *alpha, state);
}

VectorField field_halphen_join(const std::optional<std::array<Rational, 3>>& alpha) {
  std::vector<Variable> state{{"x1", 0}, {"x2", 0}, {"y1", 0}, {"y2", 0}};
  auto r = halphen_ring(true, state);
  VectorField sym(r, parse_all(r, {
                         "x1*(a2*x1 + (2 - a2 - a1)*x2 - (1 - a1)*(x1*x2 - y1*y2) - 1)",
                         "x2*(a3*x2 + (2 - a3 - a1)*x1 - (1 - a1)*(x1*x2 - y1*y2) - 1)",
                         "-y1*(a2*y1 + (2 - a2 - a1)*y2 - (1 - a1)*(y1*y2 - x1*x2) - 1)",
                         "-y2*(a3*y2 + (2 - a3 - a1)*y1 - (1 - a1)*(y1*y2 - x1*x2) - 1)",
                     }));
  if (!alpha) return sym;
  return specialize(sym, *alpha, state);
}

}  // namespace mflab
