#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ptm/bitstring.hpp"

namespace ptm {

/// Exact nonnegative dyadic rational numerator / 2^exponent.
///
/// Kept canonical: numerator odd, or zero with exponent 0. Subtraction that
/// would go negative throws std::domain_error.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(mpz_class numerator, std::uint32_t exponent);
  static Dyadic from_uint(unsigned long v) { return Dyadic(mpz_class(v), 0); }
  /// 2^-n
  static Dyadic pow2_neg(std::uint32_t n) { return Dyadic(mpz_class(1), n); }
  /// The value 0.b1b2...bn.
  static Dyadic from_bits(const BitString& bits);

  /// Accepts "num/2^k", "num/den" with den a power of two, "0.b1b2..." in
  /// binary, and plain integers. Throws ParseError otherwise.
  static Dyadic parse(std::string_view text);

  const mpz_class& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }

  bool operator==(const Dyadic&) const = default;
  std::strong_ordering operator<=>(const Dyadic& rhs) const;

  /// floor(value * 2^n)
  mpz_class floor_scaled(std::uint32_t n) const;

  /// "num/2^k"
  std::string str() const;

 private:
  void normalize();

  mpz_class num_{0};
  std::uint32_t exp_ = 0;
};

}  // namespace ptm
