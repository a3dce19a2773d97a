#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace charclass {

// Exponent vector with inline storage. The variable count is part of the
// value; monomials over different variable counts never compare equal.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    check_nvars(nvars);
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  explicit Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFFu) throw Error(ErrorKind::invalid_input, "exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
  }

  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  // Caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const noexcept {
    Monomial q = *this;
    for (std::size_t i = 0; i < nvars_; ++i) q.exp_[i] -= divisor.exp_[i];
    q.degree_ -= divisor.degree_;
    return q;
  }

  Monomial lcm(const Monomial& o) const noexcept {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      r.exp_[i] = exp_[i] > o.exp_[i] ? exp_[i] : o.exp_[i];
      r.degree_ += r.exp_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] != 0 && o.exp_[i] != 0) return false;
    return true;
  }

  // Index of the single variable when this is a pure power x_i^e (e >= 1).
  int pure_power_variable() const noexcept {
    int found = -1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exp_[i] == 0) continue;
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
      if (e > 0xFFFFu) throw Error(ErrorKind::invalid_input, "exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::vector<unsigned> exponents() const {
    return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
  }

  // Degree-reverse-lexicographic comparison: <0, 0, >0.
  friend int compare_degrevlex(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    for (std::size_t i = a.nvars_; i-- > 0;) {
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] > b.exp_[i] ? -1 : 1;
    }
    return 0;
  }

  std::string to_string(std::span<const std::string> names) const;

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
    return h;
  }

 private:
  static void check_nvars(std::size_t n) {
    if (n > kMaxVars)
      throw Error(ErrorKind::invalid_input,
                  "at most " + std::to_string(kMaxVars) + " variables supported");
  }

  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace charclass
