#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ideal.hpp"
#include "polynomial.hpp"

namespace charclass {

// Degree-reverse-lexicographic, or a two-block elimination order where the
// first `block` variables are compared (by degrevlex) before the rest.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, block_elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::block_elimination, block);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  int compare(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

struct GroebnerOptions {
  // Upper bound on S-pairs reduced before giving up with budget_exceeded.
  std::size_t max_pairs = 500000;
};

// Reduced, monic Groebner basis. Elements are kept twice: with terms in the
// basis order (for reduction) and as canonical polynomials.
template <class Field>
class GroebnerBasis {
 public:
  using Term = typename Polynomial<Field>::Term;
  using Terms = std::vector<Term>;

  GroebnerBasis(Field field, std::size_t nvars, MonomialOrder order, std::vector<Terms> elements);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return ordered_.size(); }

  const std::vector<Terms>& ordered_elements() const noexcept { return ordered_; }
  std::vector<Polynomial<Field>> elements() const;
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }

  bool is_unit_ideal() const noexcept {
    return ordered_.size() == 1 && leading_.front().is_one();
  }

 private:
  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Terms> ordered_;
  std::vector<Monomial> leading_;
};

template <class Field>
GroebnerBasis<Field> groebner_basis(const std::vector<Polynomial<Field>>& generators,
                                    MonomialOrder order = MonomialOrder::degrevlex(),
                                    const GroebnerOptions& options = {});

// Fully reduced remainder; zero iff f lies in the ideal.
template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& basis);

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g,
                               const MonomialOrder& order);

// Number of standard monomials of a zero-dimensional ideal (the solution
// count with multiplicity). Throws not_zero_dimensional otherwise.
template <class Field>
std::uint64_t quotient_dimension_count(const GroebnerBasis<Field>& basis);

// I ∩ J by eliminating t from t*I + (1-t)*J, computed over the rationals.
IdealPresentation intersect_ideals(const IdealPresentation& a, const IdealPresentation& b,
                                   const GroebnerOptions& options = {});

extern template class GroebnerBasis<PrimeField>;
extern template class GroebnerBasis<RationalField>;

}  // namespace charclass
