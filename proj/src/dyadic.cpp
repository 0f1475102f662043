#include "ptm/dyadic.hpp"

#include <stdexcept>

#include "ptm/errors.hpp"

namespace ptm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_nat(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("invalid dyadic literal: " + std::string(whole));
  return mpz_class(std::string(s), 10);
}

}  // namespace

Dyadic::Dyadic(mpz_class numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_ < 0) throw std::domain_error("negative dyadic");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
  mp_bitcnt_t shift = std::min<mp_bitcnt_t>(tz, exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= static_cast<std::uint32_t>(shift);
  }
}

Dyadic Dyadic::from_bits(const BitString& bits) {
  mpz_class n = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    n <<= 1;
    if (bits[i]) n += 1;
  }
  return Dyadic(n, static_cast<std::uint32_t>(bits.size()));
}

Dyadic Dyadic::parse(std::string_view text) {
  if (text.starts_with("0.")) {
    auto digits = text.substr(2);
    if (digits.empty()) throw ParseError("invalid dyadic literal: " + std::string(text));
    BitString bits;
    for (char c : digits) {
      if (c != '0' && c != '1') throw ParseError("invalid binary fraction: " + std::string(text));
      bits.push_back(c == '1');
    }
    return from_bits(bits);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_nat(text, text), 0);
  mpz_class num = parse_nat(text.substr(0, slash), text);
  auto den = text.substr(slash + 1);
  if (den.starts_with("2^")) {
    mpz_class k = parse_nat(den.substr(2), text);
    if (!k.fits_uint_p()) throw ParseError("exponent too large: " + std::string(text));
    return Dyadic(num, static_cast<std::uint32_t>(k.get_ui()));
  }
  mpz_class d = parse_nat(den, text);
  if (d == 0 || mpz_popcount(d.get_mpz_t()) != 1)
    throw ParseError("denominator is not a power of two: " + std::string(text));
  return Dyadic(num, static_cast<std::uint32_t>(mpz_scan1(d.get_mpz_t(), 0)));
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (exp_ >= rhs.exp_) {
    mpz_class r = rhs.num_;
    r <<= (exp_ - rhs.exp_);
    num_ += r;
  } else {
    num_ <<= (rhs.exp_ - exp_);
    num_ += rhs.num_;
    exp_ = rhs.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) {
  if (*this < rhs) throw std::domain_error("dyadic subtraction below zero");
  if (exp_ >= rhs.exp_) {
    mpz_class r = rhs.num_;
    r <<= (exp_ - rhs.exp_);
    num_ -= r;
  } else {
    num_ <<= (rhs.exp_ - exp_);
    num_ -= rhs.num_;
    exp_ = rhs.exp_;
  }
  normalize();
  return *this;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
  int c;
  if (exp_ >= rhs.exp_) {
    mpz_class r = rhs.num_;
    r <<= (exp_ - rhs.exp_);
    c = cmp(num_, r);
  } else {
    mpz_class l = num_;
    l <<= (rhs.exp_ - exp_);
    c = cmp(l, rhs.num_);
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

mpz_class Dyadic::floor_scaled(std::uint32_t n) const {
  mpz_class r = num_;
  if (n >= exp_) {
    r <<= (n - exp_);
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), exp_ - n);
  }
  return r;
}

std::string Dyadic::str() const { return num_.get_str() + "/2^" + std::to_string(exp_); }

}  // namespace ptm
