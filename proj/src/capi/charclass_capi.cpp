#include "charclass/charclass.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "characteristic_classes.hpp"
#include "groebner.hpp"
#include "report.hpp"
#include "sm_segre.hpp"

using charclass::ChowClass;
using charclass::ClassReport;
using charclass::Error;
using charclass::ErrorKind;
using charclass::IdealPresentation;

struct cc_context {
  charclass::GenericityContext generic;
  charclass::UnionMode union_mode = charclass::UnionMode::product;
  std::string last_error;

  // Cache keys carry every Monte-Carlo parameter, so settings may change freely.
  cc_context() { generic.cache = std::make_shared<charclass::ResultCache>(); }
};

struct cc_ideal {
  IdealPresentation value;
};

struct cc_class {
  ChowClass value;
};

struct cc_report {
  ClassReport value;
};

namespace {

cc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return CC_ERR_PARSE;
    case ErrorKind::invalid_input: return CC_ERR_INVALID_INPUT;
    case ErrorKind::dimension_mismatch: return CC_ERR_DIMENSION_MISMATCH;
    case ErrorKind::not_zero_dimensional: return CC_ERR_NOT_ZERO_DIMENSIONAL;
    case ErrorKind::genericity_failure: return CC_ERR_GENERICITY;
    case ErrorKind::trial_disagreement: return CC_ERR_TRIAL_DISAGREEMENT;
    case ErrorKind::budget_exceeded: return CC_ERR_BUDGET;
    case ErrorKind::subset_cap_exceeded: return CC_ERR_SUBSET_CAP;
    case ErrorKind::bad_prime: return CC_ERR_BAD_PRIME;
    case ErrorKind::io: return CC_ERR_IO;
    case ErrorKind::internal: return CC_ERR_INTERNAL;
  }
  return CC_ERR_INTERNAL;
}

template <class F>
cc_status guarded(cc_context* ctx, F&& body) {
  if (ctx) ctx->last_error.clear();
  auto fail = [&](cc_status s, const std::string& msg) {
    if (ctx) ctx->last_error = msg;
    return s;
  };
  try {
    body();
    return CC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  }
}

cc_status copy_string(const std::string& s, char** out) {
  if (!out) return CC_ERR_NULL_ARGUMENT;
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return CC_ERR_INTERNAL;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return CC_OK;
}

ChowClass compute_kind(const cc_context& ctx, const IdealPresentation& ideal, cc_class_kind kind) {
  using namespace charclass;
  switch (kind) {
    case CC_CLASS_SEGRE: return segre_class(ideal, ctx.generic);
    case CC_CLASS_SM_SEGRE: return sm_segre(ideal, ctx.generic, ctx.union_mode);
    case CC_CLASS_CSM: return csm(ideal, ctx.generic, ctx.union_mode);
    case CC_CLASS_FULTON: return fulton(ideal, ctx.generic);
    case CC_CLASS_MILNOR_MEASURE: return milnor(ideal, ctx.generic, ctx.union_mode).measure;
    case CC_CLASS_MILNOR: return milnor(ideal, ctx.generic, ctx.union_mode).milnor;
  }
  throw Error(ErrorKind::invalid_input, "unknown class kind");
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }

const char* cc_status_string(cc_status status) {
  switch (status) {
    case CC_OK: return "ok";
    case CC_ERR_PARSE: return "parse error";
    case CC_ERR_INVALID_INPUT: return "invalid input";
    case CC_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case CC_ERR_IO: return "i/o error";
    case CC_ERR_BAD_PRIME: return "bad prime";
    case CC_ERR_NOT_ZERO_DIMENSIONAL: return "not zero-dimensional";
    case CC_ERR_GENERICITY: return "genericity failure";
    case CC_ERR_TRIAL_DISAGREEMENT: return "trial disagreement";
    case CC_ERR_BUDGET: return "budget exceeded";
    case CC_ERR_SUBSET_CAP: return "subset cap exceeded";
    case CC_ERR_INTERNAL: return "internal error";
    case CC_ERR_NULL_ARGUMENT: return "null argument";
    case CC_ERR_OUT_OF_RANGE: return "out of range";
  }
  return "unknown status";
}

void cc_string_free(char* s) { std::free(s); }

cc_status cc_context_create(cc_context** out) {
  if (!out) return CC_ERR_NULL_ARGUMENT;
  *out = new (std::nothrow) cc_context();
  return *out ? CC_OK : CC_ERR_INTERNAL;
}

void cc_context_destroy(cc_context* ctx) { delete ctx; }

const char* cc_context_last_error(const cc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

cc_status cc_context_set_prime(cc_context* ctx, uint32_t prime) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    charclass::PrimeField check(prime);
    ctx->generic.prime = prime;
  });
}

cc_status cc_context_set_seed(cc_context* ctx, uint64_t seed) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  ctx->generic.seed = seed;
  return CC_OK;
}

cc_status cc_context_set_trials(cc_context* ctx, int trials) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  if (trials < 1) {
    ctx->last_error = "trials must be at least 1";
    return CC_ERR_INVALID_INPUT;
  }
  ctx->generic.trials = trials;
  return CC_OK;
}

cc_status cc_context_set_retries(cc_context* ctx, int retries) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  if (retries < 1) {
    ctx->last_error = "retries must be at least 1";
    return CC_ERR_INVALID_INPUT;
  }
  ctx->generic.retries = retries;
  return CC_OK;
}

cc_status cc_context_set_pair_budget(cc_context* ctx, size_t max_pairs) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  if (max_pairs == 0) {
    ctx->last_error = "pair budget must be positive";
    return CC_ERR_INVALID_INPUT;
  }
  ctx->generic.groebner.max_pairs = max_pairs;
  return CC_OK;
}

cc_status cc_context_set_union_mode(cc_context* ctx, cc_union_mode mode) {
  if (!ctx) return CC_ERR_NULL_ARGUMENT;
  if (mode != CC_UNION_PRODUCT && mode != CC_UNION_INTERSECTION) return CC_ERR_INVALID_INPUT;
  ctx->union_mode = mode == CC_UNION_PRODUCT ? charclass::UnionMode::product
                                             : charclass::UnionMode::intersection;
  return CC_OK;
}

cc_status cc_ideal_parse(cc_context* ctx, const char* text, cc_ideal** out) {
  if (!ctx || !text || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] { *out = new cc_ideal{charclass::parse_ideal_file(text)}; });
}

cc_status cc_ideal_read_file(cc_context* ctx, const char* path, cc_ideal** out) {
  if (!ctx || !path || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new cc_ideal{charclass::parse_ideal_file(buf.str())};
  });
}

void cc_ideal_destroy(cc_ideal* ideal) { delete ideal; }

size_t cc_ideal_ambient_dim(const cc_ideal* ideal) { return ideal ? ideal->value.ambient_dim() : 0; }

size_t cc_ideal_num_generators(const cc_ideal* ideal) {
  return ideal ? ideal->value.generators().size() : 0;
}

int cc_ideal_max_degree(const cc_ideal* ideal) { return ideal ? ideal->value.max_degree() : -1; }

cc_status cc_ideal_to_string(const cc_ideal* ideal, char** out) {
  if (!ideal) return CC_ERR_NULL_ARGUMENT;
  return copy_string(ideal->value.to_string(), out);
}

cc_status cc_ideal_product(cc_context* ctx, const cc_ideal* const* ideals, size_t count,
                           cc_ideal** out) {
  if (!ctx || !ideals || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    std::vector<IdealPresentation> list;
    for (size_t i = 0; i < count; ++i) {
      if (!ideals[i]) throw Error(ErrorKind::invalid_input, "null ideal in list");
      list.push_back(ideals[i]->value);
    }
    *out = new cc_ideal{charclass::product_ideal(list)};
  });
}

cc_status cc_ideal_intersect(cc_context* ctx, const cc_ideal* a, const cc_ideal* b, cc_ideal** out) {
  if (!ctx || !a || !b || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = new cc_ideal{charclass::intersect_ideals(a->value, b->value, ctx->generic.groebner)};
  });
}

cc_status cc_ideal_singularity_subscheme(cc_context* ctx, const cc_ideal* principal, cc_ideal** out) {
  if (!ctx || !principal || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const auto& gens = principal->value.generators();
    if (gens.size() != 1)
      throw Error(ErrorKind::invalid_input, "singularity subscheme needs a principal ideal");
    *out = new cc_ideal{charclass::singularity_subscheme(gens.front(), principal->value.variables())};
  });
}

cc_status cc_compute_class(cc_context* ctx, const cc_ideal* ideal, cc_class_kind kind, cc_class** out) {
  if (!ctx || !ideal || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] { *out = new cc_class{compute_kind(*ctx, ideal->value, kind)}; });
}

cc_status cc_sm_segre_inclusion_exclusion(cc_context* ctx, const cc_ideal* const* ideals,
                                          size_t count, cc_class** out) {
  if (!ctx || !ideals || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    std::vector<IdealPresentation> list;
    for (size_t i = 0; i < count; ++i) {
      if (!ideals[i]) throw Error(ErrorKind::invalid_input, "null ideal in list");
      list.push_back(ideals[i]->value);
    }
    *out = new cc_class{
        charclass::sm_segre_inclusion_exclusion(list, ctx->generic, ctx->union_mode)};
  });
}

void cc_class_destroy(cc_class* cls) { delete cls; }

size_t cc_class_ambient_dim(const cc_class* cls) { return cls ? cls->value.ambient_dim() : 0; }

cc_status cc_class_coeff_i64(const cc_class* cls, size_t codim, int64_t* out) {
  if (!cls || !out) return CC_ERR_NULL_ARGUMENT;
  if (codim > cls->value.ambient_dim()) return CC_ERR_OUT_OF_RANGE;
  const mpz_class& v = cls->value[codim];
  if (!mpz_fits_slong_p(v.get_mpz_t())) return CC_ERR_OUT_OF_RANGE;
  *out = v.get_si();
  return CC_OK;
}

cc_status cc_class_coeff_string(const cc_class* cls, size_t codim, char** out) {
  if (!cls) return CC_ERR_NULL_ARGUMENT;
  if (codim > cls->value.ambient_dim()) return CC_ERR_OUT_OF_RANGE;
  return copy_string(cls->value[codim].get_str(), out);
}

cc_status cc_class_to_string(const cc_class* cls, cc_notation notation, char** out) {
  if (!cls) return CC_ERR_NULL_ARGUMENT;
  return copy_string(notation == CC_NOTATION_CYCLES ? cls->value.to_cycle_string()
                                                    : cls->value.to_h_string(),
                     out);
}

cc_status cc_compute_report(cc_context* ctx, const cc_ideal* ideal, unsigned request_flags,
                            cc_report** out) {
  if (!ctx || !ideal || !out) return CC_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    charclass::ClassRequest req;
    req.segre = request_flags & CC_REQUEST_SEGRE;
    req.sm_segre = request_flags & CC_REQUEST_SM_SEGRE;
    req.csm = request_flags & CC_REQUEST_CSM;
    req.fulton = request_flags & CC_REQUEST_FULTON;
    req.milnor = request_flags & CC_REQUEST_MILNOR;
    req.euler = request_flags & CC_REQUEST_EULER;
    if (!req.any()) throw Error(ErrorKind::invalid_input, "no classes requested");
    *out = new cc_report{charclass::compute_report(ideal->value, ctx->generic, req, ctx->union_mode)};
  });
}

void cc_report_destroy(cc_report* report) { delete report; }

cc_status cc_report_get_class(const cc_report* report, cc_class_kind kind, cc_class** out) {
  if (!report || !out) return CC_ERR_NULL_ARGUMENT;
  const ClassReport& r = report->value;
  const std::optional<ChowClass>* slot = nullptr;
  switch (kind) {
    case CC_CLASS_SEGRE: slot = &r.segre; break;
    case CC_CLASS_SM_SEGRE: slot = &r.sm_segre; break;
    case CC_CLASS_CSM: slot = &r.csm; break;
    case CC_CLASS_FULTON: slot = &r.fulton; break;
    case CC_CLASS_MILNOR_MEASURE: slot = &r.milnor_measure; break;
    case CC_CLASS_MILNOR: slot = &r.milnor; break;
  }
  if (!slot || !*slot) return CC_ERR_OUT_OF_RANGE;
  *out = new (std::nothrow) cc_class{**slot};
  return *out ? CC_OK : CC_ERR_INTERNAL;
}

cc_status cc_report_euler(const cc_report* report, int64_t* out) {
  if (!report || !out) return CC_ERR_NULL_ARGUMENT;
  const auto& e = report->value.euler;
  if (!e || !mpz_fits_slong_p(e->get_mpz_t())) return CC_ERR_OUT_OF_RANGE;
  *out = e->get_si();
  return CC_OK;
}

cc_status cc_report_to_json(const cc_report* report, char** out) {
  if (!report) return CC_ERR_NULL_ARGUMENT;
  return copy_string(charclass::report_to_json(report->value).dump(2) + "\n", out);
}

cc_status cc_report_to_text(const cc_report* report, char** out) {
  if (!report) return CC_ERR_NULL_ARGUMENT;
  return copy_string(charclass::report_to_text(report->value), out);
}

void cc_cross_check_stats(uint64_t* performed, uint64_t* failed) {
  auto stats = charclass::cross_check_stats();
  if (performed) *performed = stats.performed;
  if (failed) *failed = stats.failed;
}

}  // extern "C"
