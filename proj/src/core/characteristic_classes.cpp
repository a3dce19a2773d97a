#include "characteristic_classes.hpp"

namespace charclass {

ChowClass csm(const IdealPresentation& ideal, const GenericityContext& ctx, UnionMode mode) {
  return chern_tangent(ideal.ambient_dim()) * sm_segre(ideal, ctx, mode);
}

ChowClass fulton(const IdealPresentation& ideal, const GenericityContext& ctx) {
  return chern_tangent(ideal.ambient_dim()) * segre_class(ideal, ctx);
}

MilnorClasses milnor(const IdealPresentation& ideal, const GenericityContext& ctx, UnionMode mode) {
  ChowClass measure = sm_segre(ideal, ctx, mode) - segre_class(ideal, ctx);
  return {measure, chern_tangent(ideal.ambient_dim()) * measure};
}

mpz_class euler(const IdealPresentation& ideal, const GenericityContext& ctx, UnionMode mode) {
  return integral(csm(ideal, ctx, mode));
}

ClassReport compute_report(const IdealPresentation& ideal, const GenericityContext& ctx,
                           const ClassRequest& request, UnionMode mode) {
  ctx.validate();
  ClassReport report;
  report.ambient_dim = ideal.ambient_dim();
  report.variables = ideal.variables();
  report.prime = ctx.prime;
  report.seed = ctx.seed;
  report.trials = ctx.trials;
  report.retries = ctx.retries;

  const bool need_segre = request.segre || request.fulton || request.milnor;
  const bool need_sm = request.sm_segre || request.csm || request.milnor || request.euler;
  const ChowClass tangent = chern_tangent(ideal.ambient_dim());

  std::optional<ChowClass> s, s_sm;
  if (need_segre) s = segre_class(ideal, ctx);
  if (need_sm) s_sm = sm_segre(ideal, ctx, mode);

  if (request.segre) report.segre = s;
  if (request.sm_segre) report.sm_segre = s_sm;
  std::optional<ChowClass> c_sm, c_f;
  if (need_sm) c_sm = tangent * *s_sm;
  if (need_segre) c_f = tangent * *s;
  if (request.csm) report.csm = c_sm;
  if (request.fulton) report.fulton = c_f;
  if (request.milnor) {
    report.milnor_measure = *s_sm - *s;
    report.milnor = tangent * *report.milnor_measure;
    if (!(*c_sm - *c_f == *report.milnor))
      throw Error(ErrorKind::internal, "csm - fulton differs from the Milnor class");
  }
  if (request.euler) report.euler = integral(*c_sm);
  return report;
}

}  // namespace charclass
