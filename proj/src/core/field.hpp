#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace charclass {

bool is_prime(std::uint64_t value);

// Residues modulo a word-sized prime. Values are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;
  // Products of two residues must fit in 64 bits.
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p > kMaxPrime || !is_prime(p)) {
      throw Error(ErrorKind::bad_prime,
                  "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // a - b*c
  value_type sub_mul(value_type a, value_type b, value_type c) const noexcept {
    return sub(a, mul(b, c));
  }
  value_type inv(value_type a) const;

  value_type from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  // Throws bad_prime when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& q) const;

  // Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(value_type a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(value_type a) const { return std::to_string(to_signed(a)); }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Exact rationals; the coefficient domain of every user-facing ideal.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& b,
                     const value_type& c) const {
    return a - b * c;
  }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::internal, "inverse of zero");
    return 1 / a;
  }

  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_rational(const mpq_class& q) const { return q; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const noexcept { return true; }
};

}  // namespace charclass
