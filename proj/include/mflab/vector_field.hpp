#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mflab/matrix.hpp"
#include "mflab/multipoly.hpp"
#include "mflab/ratfunc.hpp"

namespace mflab {

/// Polynomial vector field. The first `dimension()` ring variables are the
/// state variables, one component each; any remaining ring variables are
/// parameters, constant along the flow.
class VectorField {
 public:
  VectorField() = default;
  VectorField(RingPtr ring, std::vector<MultiPoly> components);

  const RingPtr& ring() const { return ring_; }
  std::size_t dimension() const { return components_.size(); }
  const MultiPoly& operator[](std::size_t i) const { return components_[i]; }
  const MultiPoly& component(std::string_view name) const;
  const std::vector<MultiPoly>& components() const { return components_; }

  VectorField operator-() const;
  friend bool operator==(const VectorField& a, const VectorField& b);

  /// One "var' = poly" line per component.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> components_;
};

MultiPoly apply_derivation(const VectorField& v, const MultiPoly& p);
RationalFunction apply_derivation(const VectorField& v, const RationalFunction& p);
/// r-fold application; r = 0 returns p.
MultiPoly iterate_derivation(const VectorField& v, const MultiPoly& p, int r);
/// [V,W]_i = V(W_i) - W(V_i).
VectorField lie_bracket(const VectorField& a, const VectorField& b);
/// Q with V(P) = Q*P; throws kNotInvariant when P does not divide V(P).
MultiPoly invariance_cofactor(const VectorField& v, const MultiPoly& p);
/// Jacobian of the state components at `at` (one value per ring variable).
/// Throws kNotSingular unless V(at) = 0.
RationalMatrix linear_part(const VectorField& v, std::span<const Rational> at);
/// Characteristic polynomial det(lambda*I - M) in a fresh variable `lambda`.
MultiPoly characteristic_polynomial(const RationalMatrix& m);
/// Adds a weight-1 variable `name` (with zero component) and pads every
/// component so that V_i has weighted degree weight(var_i) + shift for one
/// common shift, returned through `shift`.
VectorField homogenize_field(const VectorField& v, const std::string& name, int* shift = nullptr);

/// g([t:s]) in the chart y1 = 1, as (x2, x3, y2, y3); nullopt when s + t = 0
/// (the point lies at infinity). Throws on (0, 0).
std::optional<std::vector<Rational>> singular_curve_point(const Rational& t, const Rational& s);

}  // namespace mflab
