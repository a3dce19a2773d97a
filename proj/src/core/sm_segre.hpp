#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chow.hpp"
#include "ideal.hpp"
#include "segre.hpp"

namespace charclass {

// How the union of several hypersurfaces (or subschemes) is realized:
// the product of their ideals, or the intersection of their ideals.
// Both are supported on the set-theoretic union.
enum class UnionMode { product, intersection };

constexpr std::size_t kDefaultSubsetCap = 10;

// A hypersurface X = V(F) with its singularity subscheme Y = V(dF/dx_i).
struct HypersurfaceDatum {
  QPolynomial equation;
  int degree;
  IdealPresentation singular;
};

HypersurfaceDatum make_hypersurface(const QPolynomial& f, const std::vector<std::string>& variables);

IdealPresentation singularity_subscheme(const QPolynomial& f,
                                        const std::vector<std::string>& variables);

// c(O(dH))^{-1} (s(Y)^dual ⊗ O(dH)), by the dual/tensor calculus.
ChowClass residual_term_by_class_calculus(const ChowClass& segre_singular, long degree);
// The same term assembled dimension by dimension:
// (-1)^{n-m} sum_j C(n-m, j) X^j s(Y)_{m+j} in dimension m.
ChowClass residual_term_by_binomial_formula(const ChowClass& segre_singular, long degree);

// s(X) + residual term, evaluated both ways; a disagreement is an internal error.
ChowClass sm_segre_from_segre_classes(const ChowClass& segre_hypersurface,
                                      const ChowClass& segre_singular, long degree);

struct CrossCheckStats {
  std::uint64_t performed = 0;
  std::uint64_t failed = 0;
};
// Process-wide tally of the two-route comparison above.
CrossCheckStats cross_check_stats();

ChowClass sm_segre_hypersurface(const QPolynomial& f, const std::vector<std::string>& variables,
                                const GenericityContext& ctx);

// Signed sum over all nonempty subsets of generators of the SM-Segre classes
// of the union hypersurfaces.
ChowClass sm_segre(const IdealPresentation& ideal, const GenericityContext& ctx,
                   UnionMode mode = UnionMode::product, std::size_t subset_cap = kDefaultSubsetCap);

// Inclusion-exclusion over arbitrary subschemes Z_1..Z_r; unions realized
// according to `mode`.
ChowClass sm_segre_inclusion_exclusion(const std::vector<IdealPresentation>& ideals,
                                       const GenericityContext& ctx,
                                       UnionMode mode = UnionMode::product,
                                       std::size_t subset_cap = kDefaultSubsetCap);

}  // namespace charclass
