#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace charclass {

// Sparse multivariate polynomial over Field. Terms are kept sorted by
// descending degree-reverse-lexicographic order with no zero coefficients,
// so equal polynomials have identical term vectors.
template <class Field>
class Polynomial {
 public:
  using Coeff = typename Field::value_type;
  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  Polynomial() = default;
  Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars > Monomial::kMaxVars)
      throw Error(ErrorKind::invalid_input, "too many variables");
  }

  static Polynomial constant(Field field, std::size_t nvars, Coeff c) {
    Polynomial p(std::move(field), nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }
  static Polynomial term(Field field, Monomial m, Coeff c) {
    Polynomial p(std::move(field), m.nvars());
    if (!p.field_.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index) {
    Coeff one = field.one();
    return term(std::move(field), Monomial::variable(nvars, index), std::move(one));
  }
  // Accepts terms in any order; duplicates are combined and zeros dropped.
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(std::move(field), nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  const Term& leading_term() const { return terms_.front(); }

  // -1 for the zero polynomial.
  int total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
  }
  bool is_homogeneous() const noexcept {
    for (const Term& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b);
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
      if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  Polynomial scaled(const Coeff& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  // Multiplying by a monomial preserves the term order.
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.monomial = t.monomial * m;
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
      unsigned e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      out.push_back({m, field_.mul(t.coeff, field_.from_int(e))});
    }
    return from_terms(field_, nvars_, std::move(out));
  }

  Coeff evaluate(std::span<const Coeff> point) const {
    Coeff sum = field_.zero();
    for (const Term& t : terms_) {
      Coeff v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < t.monomial[i]; ++e) v = field_.mul(v, point[i]);
      sum = field_.add(sum, v);
    }
    return sum;
  }

  // Coefficient-wise image in another field (e.g. reduction mod p).
  template <class Target, class Map>
  Polynomial<Target> map_coefficients(const Target& target, Map&& map) const {
    std::vector<typename Polynomial<Target>::Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.monomial, map(t.coeff)});
    return Polynomial<Target>::from_terms(target, nvars_, std::move(out));
  }

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return compare_degrevlex(a.monomial, b.monomial) > 0;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].monomial == acc.monomial) {
        acc.coeff = field_.add(acc.coeff, terms_[j].coeff);
        ++j;
      }
      if (!field_.is_zero(acc.coeff)) terms_[out++] = std::move(acc);
      i = j;
    }
    terms_.resize(out);
  }

  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_))
      throw Error(ErrorKind::dimension_mismatch,
                  "polynomials live in different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    const Field& f = a.field_;
    Polynomial r(f, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = compare_degrevlex(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        Coeff v = subtract ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                           : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!f.is_zero(v)) r.terms_.push_back({a.terms_[i].monomial, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& s : a.terms_)
      for (const Term& t : b.terms_)
        out.push_back({s.monomial * t.monomial, a.field_.mul(s.coeff, t.coeff)});
    return from_terms(a.field_, a.nvars_, std::move(out));
  }

  Field field_{};
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using QPolynomial = Polynomial<RationalField>;
using FpPolynomial = Polynomial<PrimeField>;

// Reduction of a rational polynomial modulo the field characteristic.
FpPolynomial reduce_mod_p(const QPolynomial& f, const PrimeField& field);

// Clears denominators and divides by the integer content; the leading
// coefficient becomes positive. Scheme-level data is unchanged.
QPolynomial primitive_part(const QPolynomial& f);

}  // namespace charclass
