#include "sm_segre.hpp"

#include <atomic>

#include "groebner.hpp"

namespace charclass {

namespace {

std::atomic<std::uint64_t> g_checks_performed{0};
std::atomic<std::uint64_t> g_checks_failed{0};

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_subset_count(std::size_t r, std::size_t cap, const char* what) {
  if (r > cap)
    throw Error(ErrorKind::subset_cap_exceeded,
                std::to_string(r) + " " + what + " exceed the subset cap of " +
                    std::to_string(cap) + " (2^r - 1 terms)");
}

// Principal generator of the union of hypersurfaces V(f) for f in `chosen`.
QPolynomial union_equation(const std::vector<QPolynomial>& chosen,
                           const std::vector<std::string>& variables, UnionMode mode,
                           const GenericityContext& ctx) {
  QPolynomial acc = chosen.front();
  for (std::size_t k = 1; k < chosen.size(); ++k) {
    if (mode == UnionMode::product) {
      acc *= chosen[k];
      continue;
    }
    IdealPresentation meet = intersect_ideals(IdealPresentation(variables, {acc}),
                                              IdealPresentation(variables, {chosen[k]}),
                                              ctx.groebner);
    if (meet.generators().size() != 1)
      throw Error(ErrorKind::internal, "intersection of principal ideals is not principal");
    acc = meet.generators().front();
  }
  return acc;
}

IdealPresentation union_ideal(const std::vector<IdealPresentation>& chosen, UnionMode mode,
                              const GenericityContext& ctx) {
  if (mode == UnionMode::product) return product_ideal(chosen);
  IdealPresentation acc = chosen.front();
  for (std::size_t k = 1; k < chosen.size(); ++k)
    acc = intersect_ideals(acc, chosen[k], ctx.groebner);
  return acc;
}

}  // namespace

HypersurfaceDatum make_hypersurface(const QPolynomial& f, const std::vector<std::string>& variables) {
  if (f.is_constant() || !f.is_homogeneous())
    throw Error(ErrorKind::invalid_input, "hypersurface equation must be homogeneous and nonconstant");
  return {f, f.total_degree(), singularity_subscheme(f, variables)};
}

IdealPresentation singularity_subscheme(const QPolynomial& f,
                                        const std::vector<std::string>& variables) {
  return partial_derivatives(f, variables);
}

ChowClass residual_term_by_class_calculus(const ChowClass& segre_singular, long degree) {
  const std::size_t n = segre_singular.ambient_dim();
  return truncated_inverse(line_bundle_chern(n, degree)) * tensor_by(dual(segre_singular), degree);
}

ChowClass residual_term_by_binomial_formula(const ChowClass& segre_singular, long degree) {
  const std::size_t n = segre_singular.ambient_dim();
  // Dimension-m component of s(Y) sits at codimension n - m.
  auto dim_part = [&](std::size_t m) -> const mpz_class& { return segre_singular[n - m]; };
  ChowClass r(n);
  mpz_class x_power;
  for (std::size_t m = 0; m <= n; ++m) {
    const std::size_t codim = n - m;
    mpz_class sum = 0;
    for (std::size_t j = 0; j <= codim; ++j) {
      mpz_ui_pow_ui(x_power.get_mpz_t(), static_cast<unsigned long>(degree < 0 ? -degree : degree), j);
      if (degree < 0 && j % 2 == 1) x_power = -x_power;
      sum += binomial(codim, j) * x_power * dim_part(m + j);
    }
    r[codim] = codim % 2 == 0 ? sum : mpz_class(-sum);
  }
  return r;
}

ChowClass sm_segre_from_segre_classes(const ChowClass& segre_hypersurface,
                                      const ChowClass& segre_singular, long degree) {
  ChowClass calculus = segre_hypersurface + residual_term_by_class_calculus(segre_singular, degree);
  ChowClass binomial_route =
      segre_hypersurface + residual_term_by_binomial_formula(segre_singular, degree);
  ++g_checks_performed;
  if (!(calculus == binomial_route)) {
    ++g_checks_failed;
    throw Error(ErrorKind::internal, "SM-Segre evaluation routes disagree: " +
                                         calculus.to_h_string() + " vs " +
                                         binomial_route.to_h_string());
  }
  return calculus;
}

CrossCheckStats cross_check_stats() {
  return {g_checks_performed.load(), g_checks_failed.load()};
}

ChowClass sm_segre_hypersurface(const QPolynomial& f, const std::vector<std::string>& variables,
                                const GenericityContext& ctx) {
  HypersurfaceDatum x = make_hypersurface(f, variables);
  const std::size_t n = variables.size() - 1;
  std::string key;
  if (ctx.cache) {
    key = "smh|" + ctx.fingerprint() + "|" + IdealPresentation(variables, {f}).to_string();
    if (auto hit = ctx.cache->find(key)) return *hit;
  }
  const long d = x.degree;
  ChowClass segre_x = ChowClass::hyperplane_power(n, 1, d) * truncated_inverse(line_bundle_chern(n, d));
  ChowClass segre_y = segre_class(x.singular, ctx);
  ChowClass result = sm_segre_from_segre_classes(segre_x, segre_y, d);
  if (ctx.cache) ctx.cache->insert(key, result);
  return result;
}

ChowClass sm_segre(const IdealPresentation& ideal, const GenericityContext& ctx, UnionMode mode,
                   std::size_t subset_cap) {
  const std::size_t n = ideal.ambient_dim();
  const auto& gens = ideal.generators();
  check_subset_count(gens.size(), subset_cap, "generators");
  if (ideal.has_unit_generator()) return ChowClass(n);

  ChowClass total(n);
  const std::size_t r = gens.size();
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<QPolynomial> chosen;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) chosen.push_back(gens[k]);
    QPolynomial f = union_equation(chosen, ideal.variables(), mode, ctx);
    ChowClass term = sm_segre_hypersurface(f, ideal.variables(), ctx);
    if (chosen.size() % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

ChowClass sm_segre_inclusion_exclusion(const std::vector<IdealPresentation>& ideals,
                                       const GenericityContext& ctx, UnionMode mode,
                                       std::size_t subset_cap) {
  if (ideals.empty()) throw Error(ErrorKind::invalid_input, "no subschemes given");
  check_subset_count(ideals.size(), subset_cap, "subschemes");
  for (const auto& I : ideals)
    if (I.variables() != ideals.front().variables())
      throw Error(ErrorKind::dimension_mismatch, "subschemes live in different ambient spaces");

  const std::size_t n = ideals.front().ambient_dim();
  const std::size_t r = ideals.size();
  ChowClass total(n);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<IdealPresentation> chosen;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) chosen.push_back(ideals[k]);
    ChowClass term = sm_segre(union_ideal(chosen, mode, ctx), ctx, UnionMode::product, subset_cap);
    if (chosen.size() % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace charclass
