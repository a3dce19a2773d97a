#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "characteristic_classes.hpp"
#include "chow.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "segre.hpp"
#include "sm_segre.hpp"

namespace fixtures {

using namespace charclass;

inline IdealPresentation ideal(std::string_view text) { return parse_ideal_file(text); }

inline QPolynomial poly(std::string_view text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

inline std::vector<std::string> vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
  return std::vector<std::string>(names, names + n);
}

inline ChowClass cls(std::size_t n, std::initializer_list<long> coeffs) {
  return ChowClass(n, coeffs);
}

inline GenericityContext context(std::uint64_t seed = 0) {
  GenericityContext ctx;
  ctx.seed = seed;
  return ctx;
}

// Dense form with small integer coefficients, every monomial present.
inline QPolynomial random_form(std::size_t nvars, unsigned degree, std::mt19937_64& rng,
                               long bound = 9) {
  RationalField q;
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<QPolynomial::Term> terms;
  for (const Monomial& m : monomials_of_degree(nvars, degree)) {
    long c = 0;
    while (c == 0) c = coeff(rng);
    terms.push_back({m, mpq_class(c)});
  }
  return QPolynomial::from_terms(q, nvars, std::move(terms));
}

// Random polynomial with a few terms of mixed degrees, possibly zero.
template <class Field>
Polynomial<Field> random_sparse(const Field& field, std::size_t nvars, unsigned max_degree,
                                std::size_t max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<typename Polynomial<Field>::Term> terms;
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    Monomial m(nvars);
    unsigned budget = max_degree;
    for (std::size_t v = 0; v < nvars; ++v) {
      unsigned e = std::min(exp(rng), budget);
      m.set(v, e);
      budget -= e;
    }
    terms.push_back({m, field.from_int(coeff(rng))});
  }
  return Polynomial<Field>::from_terms(field, nvars, std::move(terms));
}

inline IdealPresentation generic_complete_intersection(const std::vector<unsigned>& degrees,
                                                       std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<QPolynomial> gens;
  for (unsigned d : degrees) gens.push_back(random_form(n + 1, d, rng));
  return IdealPresentation(vars(n + 1), gens);
}

}  // namespace fixtures

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<charclass::ChowClass> {
  static String convert(const charclass::ChowClass& c) { return c.to_h_string().c_str(); }
};
}  // namespace doctest
#endif
