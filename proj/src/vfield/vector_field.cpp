#include "mflab/vector_field.hpp"

#include <algorithm>
#include <sstream>

namespace mflab {

VectorField::VectorField(RingPtr ring, std::vector<MultiPoly> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() > ring_->size()) {
    throw Error(ErrorCode::kShapeMismatch, "more components than variables");
  }
  for (auto& c : components_) c = c.rebased(ring_);
}

const MultiPoly& VectorField::component(std::string_view name) const {
  std::size_t i = ring_->require(name);
  if (i >= components_.size()) throw Error(ErrorCode::kVariableMismatch, "parameter has no component");
  return components_[i];
}

VectorField VectorField::operator-() const {
  std::vector<MultiPoly> neg;
  for (const auto& c : components_) neg.push_back(-c);
  return VectorField(ring_, std::move(neg));
}

bool operator==(const VectorField& a, const VectorField& b) {
  return same_ring(a.ring_, b.ring_) && a.components_ == b.components_;
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    os << (*ring_)[i].name << "' = " << components_[i].to_string() << '\n';
  }
  return os.str();
}

MultiPoly apply_derivation(const VectorField& v, const MultiPoly& p) {
  MultiPoly q = p.rebased(v.ring());
  MultiPoly out(v.ring());
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (v[i].is_zero() || q.degree_in(i) == 0) continue;
    out += v[i] * q.derivative(i);
  }
  return out;
}

RationalFunction apply_derivation(const VectorField& v, const RationalFunction& p) {
  const MultiPoly& n = p.num();
  const MultiPoly& d = p.den();
  MultiPoly num = apply_derivation(v, n) * d - n * apply_derivation(v, d);
  return RationalFunction(std::move(num), d * d);
}

MultiPoly iterate_derivation(const VectorField& v, const MultiPoly& p, int r) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative derivation count");
  MultiPoly out = p.rebased(v.ring());
  for (int k = 0; k < r; ++k) out = apply_derivation(v, out);
  return out;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  if (!same_ring(a.ring(), b.ring()) || a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kVariableMismatch, "lie bracket of fields on different spaces");
  }
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.push_back(apply_derivation(a, b[i]) - apply_derivation(b, a[i]));
  }
  return VectorField(a.ring(), std::move(out));
}

MultiPoly invariance_cofactor(const VectorField& v, const MultiPoly& p) {
  auto q = divide_exact(apply_derivation(v, p), p.rebased(v.ring()));
  if (!q) throw Error(ErrorCode::kNotInvariant, "polynomial is not invariant: " + p.to_string());
  return *q;
}

RationalMatrix linear_part(const VectorField& v, std::span<const Rational> at) {
  if (at.size() != v.ring()->size()) {
    throw Error(ErrorCode::kShapeMismatch, "point dimension does not match the ring");
  }
  std::size_t n = v.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (evaluate(v[i], at) != 0) throw Error(ErrorCode::kNotSingular, "field does not vanish at the point");
  }
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = evaluate(v[i].derivative(j), at);
  return m;
}

MultiPoly characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "characteristic polynomial of a non-square matrix");
  auto ring = make_ring({{"lambda", 1}});
  auto lambda = MultiPoly::variable(ring, 0);
  PolyMatrix a(m.rows(), m.cols(), MultiPoly(ring));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a(r, c) = MultiPoly::constant(ring, -m(r, c));
      if (r == c) a(r, c) += lambda;
    }
  }
  return bareiss_det(a);
}

VectorField homogenize_field(const VectorField& v, const std::string& name, int* shift_out) {
  const Ring& old = *v.ring();
  std::size_t n = v.dimension();
  std::vector<Variable> vars(old.variables().begin(), old.variables().begin() + static_cast<long>(n));
  vars.push_back({name, 1});
  vars.insert(vars.end(), old.variables().begin() + static_cast<long>(n), old.variables().end());
  RingPtr ring = make_ring(std::move(vars));
  std::size_t h = n;

  auto degree = [&old](const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < old.size(); ++i) d += m[i] * old[i].weight;
    return d;
  };
  int shift = 0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : v[i].terms()) {
      int s = degree(t.first) - old[i].weight;
      if (first || s > shift) shift = s;
      first = false;
    }
  }
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly c = v[i].rebased(ring);
    std::vector<MultiPoly::Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
      Monomial m = c.terms()[k].first;
      m.set(h, old[i].weight + shift - degree(v[i].terms()[k].first));
      terms.emplace_back(m, c.terms()[k].second);
    }
    comps.emplace_back(ring, std::move(terms));
  }
  comps.emplace_back(ring);
  if (shift_out) *shift_out = shift;
  return VectorField(ring, std::move(comps));
}

}  // namespace mflab
