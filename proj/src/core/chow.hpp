#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charclass {

// Class in A_*(P^n) written as sum_p c_p H^p, indexed by codimension p
// (H^p is the class of a linear subspace of dimension n - p). H^{n+1} = 0.
class ChowClass {
 public:
  ChowClass() = default;
  explicit ChowClass(std::size_t ambient_dim) : n_(ambient_dim), c_(ambient_dim + 1) {}
  // Entries beyond codimension n must be zero.
  ChowClass(std::size_t ambient_dim, std::vector<mpz_class> coeffs);
  ChowClass(std::size_t ambient_dim, std::initializer_list<long> coeffs);

  static ChowClass one(std::size_t n) { return hyperplane_power(n, 0); }
  static ChowClass hyperplane_power(std::size_t n, std::size_t p, long coeff = 1);

  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  const mpz_class& operator[](std::size_t p) const { return c_.at(p); }
  mpz_class& operator[](std::size_t p) { return c_.at(p); }

  bool is_zero() const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const mpz_class& k, ChowClass a) {
    for (auto& v : a.c_) v *= k;
    return a;
  }
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  // "2H - 3H^2"
  std::string to_h_string() const;
  // "2[P^1] - 3[P^0]"
  std::string to_cycle_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> c_;
};

ChowClass truncated_mul(const ChowClass& a, const ChowClass& b);
// Requires a unit constant term (+1 or -1).
ChowClass truncated_inverse(const ChowClass& a);
// Codimension-p part multiplied by (-1)^p.
ChowClass dual(const ChowClass& a);
// Codimension-p part divided by (1 + kH)^p: tensor with O(kH).
ChowClass tensor_by(const ChowClass& a, long k);
// c(O(kH)) = 1 + kH.
ChowClass line_bundle_chern(std::size_t n, long k);
// c(T P^n) = (1 + H)^{n+1}.
ChowClass chern_tangent(std::size_t n);
// Degree of the zero-dimensional part.
mpz_class integral(const ChowClass& a);
// Push forward along a linear P^{n_from} in P^{n_to}: H^p -> H^{p + n_to - n_from}.
ChowClass pushforward_linear_embedding(const ChowClass& a, std::size_t n_from, std::size_t n_to);
// Segre class of a complete intersection of the given degrees:
// prod(d_i) H^k / prod(1 + d_i H).
ChowClass ci_segre_oracle(const std::vector<long>& degrees, std::size_t n);

}  // namespace charclass
