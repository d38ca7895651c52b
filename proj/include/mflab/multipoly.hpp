#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mflab/error.hpp"
#include "mflab/monomial.hpp"
#include "mflab/rational.hpp"

namespace mflab {

struct Variable {
  std::string name;
  int weight = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered, weighted variable list shared by every polynomial built over it.
class Ring {
 public:
  explicit Ring(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws kVariableMismatch for unknown names.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are stored in ascending lexicographic monomial order with no zero
/// coefficients. A default-constructed polynomial is the zero polynomial
/// without a ring; it acts as an additive identity for any ring.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.back(); }

  /// Weighted degree d if every term has weighted degree d, nullopt when
  /// inhomogeneous. Throws kUndefinedDegree on the zero polynomial.
  std::optional<int> weighted_degree() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;

  MultiPoly derivative(std::size_t var) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: terms by descending weighted degree then ascending
  /// exponent vector, joined by " + ", each "c*x^a*y^b" with c always shown.
  std::string to_string() const;

  /// Same polynomial over a structurally equal or larger ring; variables are
  /// matched by name.
  MultiPoly rebased(const RingPtr& target) const;

 private:
  void check_ring(const MultiPoly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Quotient when `divisor` divides `dividend` exactly, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

/// Homogenizes `p` with respect to the ring weights by multiplying each term
/// with a power of the weight-1 variable `var` up to the top weighted degree.
MultiPoly homogenize(const MultiPoly& p, std::size_t var);

/// Parses polynomial expressions: integers, p/q literals, variables, + - * ^,
/// parentheses, and division by constants. Accepts the canonical format.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Evaluates `p` at `values` (indexed by ring variable) with recursive
/// Horner evaluation. `lift` maps a coefficient into T.
template <class T>
T evaluate(const MultiPoly& p, std::span<const T> values,
           const std::function<T(const Rational&)>& lift);

Rational evaluate(const MultiPoly& p, std::span<const Rational> values);

/// Replaces variable i of `p` by replacement[i], a polynomial over `target`.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> replacement,
                  const RingPtr& target);

// -- implementation of the evaluate template ---------------------------------

namespace detail {

template <class T>
class HornerEvaluator {
 public:
  HornerEvaluator(const MultiPoly& p, std::span<const T> values,
                  const std::function<T(const Rational&)>& lift)
      : terms_(p.terms()), values_(values), lift_(lift), powers_(values.size()) {}

  T run() {
    if (terms_.empty()) return lift_(Rational(0));
    return eval(0, terms_.size(), 0);
  }

 private:
  const T& power(std::size_t var, int e) {
    auto& cache = powers_[var];
    if (cache.empty()) cache.push_back(values_[var]);
    while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * values_[var]);
    return cache[e - 1];
  }

  // Terms in [lo, hi) agree on the exponents of variables < var.
  T eval(std::size_t lo, std::size_t hi, std::size_t var) {
    while (var < values_.size() && terms_[lo].first[var] == terms_[hi - 1].first[var]) {
      if (terms_[lo].first[var] != 0) break;
      ++var;
    }
    if (var == values_.size()) return lift_(terms_[lo].second);

    // groups by exponent of `var`, ascending
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = lo; i < hi;) {
      std::size_t j = i + 1;
      while (j < hi && terms_[j].first[var] == terms_[i].first[var]) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::optional<T> acc;
    int prev = 0;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      int e = terms_[it->first].first[var];
      T g = eval(it->first, it->second, var + 1);
      if (acc) {
        acc = *acc * power(var, prev - e);
        acc = *acc + g;
      } else {
        acc = std::move(g);
      }
      prev = e;
    }
    if (prev > 0) acc = *acc * power(var, prev);
    return std::move(*acc);
  }

  const std::vector<MultiPoly::Term>& terms_;
  std::span<const T> values_;
  const std::function<T(const Rational&)>& lift_;
  std::vector<std::vector<T>> powers_;
};

}  // namespace detail

template <class T>
T evaluate(const MultiPoly& p, std::span<const T> values,
           const std::function<T(const Rational&)>& lift) {
  if (p.ring() && values.size() != p.ring()->size()) {
    throw Error(ErrorCode::kVariableMismatch, "evaluate: value count does not match ring");
  }
  return detail::HornerEvaluator<T>(p, values, lift).run();
}

}  // namespace mflab
