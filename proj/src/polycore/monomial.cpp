#include "mflab/monomial.hpp"

#include "mflab/error.hpp"

namespace mflab {

void Monomial::set(std::size_t var, int exponent) {
  if (exponent < 0 || exponent > kMaxExponent) {
    throw Error(ErrorCode::kInvalidArgument, "monomial exponent out of range");
  }
  exps_[var] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "monomial exponent overflow");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  }
  return out;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_) {
    if (e) return false;
  }
  return true;
}

}  // namespace mflab
