#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

namespace mflab {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// Dense exponent vector. Comparison is lexicographic with variable 0 most
/// significant; that is the internal storage order of MultiPoly terms.
class Monomial {
 public:
  Monomial() = default;

  int operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, int exponent);

  /// Sum of exponents; throws on exponent overflow.
  Monomial operator*(const Monomial& other) const;

  /// True when every exponent of `other` is <= this one's.
  bool divisible_by(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  int total_degree() const;
  bool is_one() const;

  std::uint64_t hash() const {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::memcpy(&a, exps_.data(), 8);
    std::memcpy(&b, exps_.data() + 8, 8);
    return a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2));
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return static_cast<std::size_t>(m.hash());
  }
};

}  // namespace mflab
