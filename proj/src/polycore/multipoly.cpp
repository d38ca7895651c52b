#include "mflab/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace mflab {

// -- rationals -----------------------------------------------------------------

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorCode::kParse, "bad rational: " + text);
  if (r.get_den() == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::kDivisionByZero, "0 to a negative power");
    return 1 / pow(base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

bool is_in_z_sixth(const Rational& r) {
  Integer d = r.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 3)) d /= 3;
  return d == 1;
}

// -- rings ---------------------------------------------------------------------

Ring::Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVariables) {
    throw Error(ErrorCode::kInvalidArgument, "too many variables in ring");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i].name == vars_[j].name) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate variable " + vars_[i].name);
      }
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::kVariableMismatch, "unknown variable " + std::string(name));
  return *i;
}

RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const Ring>(std::move(vars)); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// -- construction ----------------------------------------------------------------

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
      if (terms_.back().second == 0) terms_.pop_back();
    } else if (t.second != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorCode::kVariableMismatch, "variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require(name);
  return variable(std::move(ring), i);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

// -- queries ---------------------------------------------------------------------

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return 0;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

namespace {

int weighted_degree_of(const Monomial& m, const Ring& ring) {
  int d = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) d += m[i] * ring[i].weight;
  return d;
}

}  // namespace

std::optional<int> MultiPoly::weighted_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::kUndefinedDegree, "undefined degree");
  int d = weighted_degree_of(terms_[0].first, *ring_);
  for (const auto& t : terms_) {
    if (weighted_degree_of(t.first, *ring_) != d) return std::nullopt;
  }
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

// -- arithmetic --------------------------------------------------------------------

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!ring_ || !other.ring_) return;
  if (!same_ring(ring_, other.ring_)) {
    throw Error(ErrorCode::kVariableMismatch, "polynomials over different rings");
  }
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(var, e - 1);
    out.terms_.emplace_back(dm, c * e);
  }
  // lowering one exponent can reorder terms
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = Subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms<false>(terms_, other.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, other.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.terms_.empty() || b.terms_.empty()) return MultiPoly(ring);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    // monomial multiplication preserves lexicographic order
    MultiPoly out(ring);
    out.terms_.reserve(large.size());
    const auto& [m, c] = small.terms_[0];
    for (const auto& t : large.terms_) out.terms_.emplace_back(t.first * m, t.second * c);
    return out;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(small.size() * large.size());
  Rational prod;
  for (const auto& [ma, ca] : small.terms_) {
    for (const auto& [mb, cb] : large.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ma * mb);
      if (inserted) {
        it->second.swap(prod);
      } else {
        it->second += prod;
      }
    }
  }
  MultiPoly out(ring);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.first < y.first; });
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  return a.terms_ == b.terms_;
}

// -- text --------------------------------------------------------------------------

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [this](const Term* x, const Term* y) {
    int dx = weighted_degree_of(x->first, *ring_);
    int dy = weighted_degree_of(y->first, *ring_);
    if (dx != dy) return dx > dy;
    return x->first < y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    if (!first) os << " + ";
    first = false;
    os << mflab::to_string(t->second);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      os << '*' << (*ring_)[i].name;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::rebased(const RingPtr& target) const {
  if (same_ring(ring_, target) || !ring_) return MultiPoly(target, terms_);
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->require((*ring_)[i].name);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (std::size_t i = 0; i < ring_->size(); ++i) nm.set(map[i], m[i]);
    out.emplace_back(nm, c);
  }
  return MultiPoly(target, std::move(out));
}

// -- division ----------------------------------------------------------------------

std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero polynomial");
  RingPtr ring = dividend.ring() ? dividend.ring() : divisor.ring();
  if (dividend.is_zero()) return MultiPoly(ring);
  if (dividend.ring() && divisor.ring() && !same_ring(dividend.ring(), divisor.ring())) {
    throw Error(ErrorCode::kVariableMismatch, "polynomials over different rings");
  }
  if (divisor.size() == 1) {
    const auto& [dm, dc] = divisor.terms()[0];
    std::vector<MultiPoly::Term> out;
    out.reserve(dividend.size());
    for (const auto& [m, c] : dividend.terms()) {
      if (!m.divisible_by(dm)) return std::nullopt;
      out.emplace_back(m / dm, c / dc);
    }
    return MultiPoly(ring, std::move(out));
  }
  const auto& [lead_m, lead_c] = divisor.leading_term();
  std::map<Monomial, Rational> rem;
  for (const auto& t : dividend.terms()) rem.emplace_hint(rem.end(), t.first, t.second);
  std::vector<MultiPoly::Term> quotient;
  Rational prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!top->first.divisible_by(lead_m)) return std::nullopt;
    Monomial qm = top->first / lead_m;
    Rational qc = top->second / lead_c;
    for (const auto& [m, c] : divisor.terms()) {
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), c.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(m * qm);
      if (inserted) {
        it->second = -prod;
      } else {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return MultiPoly(ring, std::move(quotient));
}

MultiPoly homogenize(const MultiPoly& p, std::size_t var) {
  const Ring& ring = *p.ring();
  if (ring[var].weight != 1) {
    throw Error(ErrorCode::kInvalidArgument, "homogenizing variable must have weight 1");
  }
  if (p.is_zero()) return p;
  int top = 0;
  for (const auto& t : p.terms()) top = std::max(top, weighted_degree_of(t.first, ring));
  std::vector<MultiPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    nm.set(var, m[var] + top - weighted_degree_of(m, ring));
    out.emplace_back(nm, c);
  }
  return MultiPoly(p.ring(), std::move(out));
}

// -- evaluation ----------------------------------------------------------------------

Rational evaluate(const MultiPoly& p, std::span<const Rational> values) {
  std::function<Rational(const Rational&)> lift = [](const Rational& c) { return c; };
  return evaluate<Rational>(p, values, lift);
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> replacement,
                  const RingPtr& target) {
  std::function<MultiPoly(const Rational&)> lift = [&target](const Rational& c) {
    return MultiPoly::constant(target, c);
  };
  std::vector<MultiPoly> values(replacement.begin(), replacement.end());
  for (auto& v : values) v = v.rebased(target);
  return evaluate<MultiPoly>(p, values, lift);
}

}  // namespace mflab
