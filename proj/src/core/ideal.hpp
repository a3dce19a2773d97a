#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace charclass {

// Homogeneous ideal of a subscheme of P^n, presented by rational generators
// in n+1 variables. The zero ideal is not representable; a constant
// generator is allowed and marks the empty scheme.
class IdealPresentation {
 public:
  IdealPresentation(std::vector<std::string> variables, std::vector<QPolynomial> generators);

  std::size_t nvars() const noexcept { return variables_.size(); }
  std::size_t ambient_dim() const noexcept { return variables_.size() - 1; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<QPolynomial>& generators() const noexcept { return generators_; }

  std::vector<int> degrees() const;
  int max_degree() const;
  bool has_unit_generator() const;

  // Same variables, different generators.
  IdealPresentation with_generators(std::vector<QPolynomial> generators) const {
    return IdealPresentation(variables_, std::move(generators));
  }

  // Parseable "vars: ...\nideal: ..." rendering; doubles as a stable identity.
  std::string to_string() const;
  std::string generators_string() const;

  friend bool operator==(const IdealPresentation& a, const IdealPresentation& b) {
    return a.variables_ == b.variables_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<QPolynomial> generators_;
};

// Reads the `vars:` / `ideal:` text format. Throws ParseError with a
// line/column position, or Error(invalid_input) for semantic problems.
IdealPresentation parse_ideal_file(std::string_view text);

// Parses one polynomial over the given variables.
QPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// Ideal of the nonzero partial derivatives of f (the singularity subscheme
// of the hypersurface f = 0). Throws for constant f.
IdealPresentation partial_derivatives(const QPolynomial& f,
                                      const std::vector<std::string>& variables);

// Products of one generator from each factor.
IdealPresentation product_ideal(const std::vector<IdealPresentation>& ideals);

// {m * f_j : deg m = d - deg f_j}, a spanning set of the degree-d piece.
std::vector<QPolynomial> graded_piece(const IdealPresentation& ideal, int degree);

// All monomials of the given degree in nvars variables, degrevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace charclass
