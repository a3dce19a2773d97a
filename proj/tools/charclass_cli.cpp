// charclass: command-line front end over the C API.
//
// Exit status: 0 success, 2 input/usage errors, 3 genericity or budget
// failures (rerun with another seed/prime), 4 internal errors.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charclass/charclass.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitInternal = 4;

int exit_code_for(cc_status s) {
  switch (s) {
    case CC_OK: return 0;
    case CC_ERR_NOT_ZERO_DIMENSIONAL:
    case CC_ERR_GENERICITY:
    case CC_ERR_TRIAL_DISAGREEMENT:
    case CC_ERR_BUDGET: return kExitGenericity;
    case CC_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

struct ContextDeleter {
  void operator()(cc_context* c) const { cc_context_destroy(c); }
};
struct IdealDeleter {
  void operator()(cc_ideal* i) const { cc_ideal_destroy(i); }
};
struct ReportDeleter {
  void operator()(cc_report* r) const { cc_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { cc_string_free(s); }
};

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Bound on the degree of the product of all generators, the largest form
// met during inclusion-exclusion.
int max_degree_encountered(const cc_ideal* ideal) {
  return cc_ideal_max_degree(ideal) * static_cast<int>(cc_ideal_num_generators(ideal));
}

int fail(cc_context* ctx, cc_status s, const std::string& what) {
  std::cerr << "charclass: " << what << ": " << cc_status_string(s);
  if (ctx && *cc_context_last_error(ctx)) std::cerr << ": " << cc_context_last_error(ctx);
  std::cerr << '\n';
  if (exit_code_for(s) == kExitGenericity)
    std::cerr << "charclass: the Monte-Carlo step failed; rerun with a different --seed, a "
                 "larger --prime, more --retries or a larger --budget\n";
  return exit_code_for(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre, SM-Segre, CSM, Fulton and Milnor classes of subschemes of P^n"};

  std::string input;
  std::vector<std::string> classes{"all"};
  std::uint32_t prime = 32003;
  std::uint64_t seed = 0;
  int trials = 3;
  int retries = 5;
  std::size_t budget = 500000;
  std::string format = "text";
  std::string union_mode = "product";

  app.add_option("--input,-i", input, "ideal file (vars: ... / ideal: ...)")->required();
  app.add_option("--classes,-c", classes,
                 "classes to compute: segre, sm-segre, csm, fulton, milnor, euler, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"segre", "sm-segre", "csm", "fulton", "milnor", "euler", "all"}));
  app.add_option("--prime,-p", prime, "prime modulus for the Monte-Carlo computations");
  app.add_option("--seed,-s", seed, "master random seed");
  app.add_option("--trials,-t", trials, "independent repetitions that must agree")
      ->check(CLI::PositiveNumber);
  app.add_option("--retries,-r", retries, "re-draws allowed on degenerate slices")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "maximum S-pairs per Groebner basis")
      ->check(CLI::PositiveNumber);
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--union-mode", union_mode,
                 "realize unions of hypersurfaces by products or intersections of ideals")
      ->check(CLI::IsMember({"product", "intersection"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  cc_context* raw_ctx = nullptr;
  if (cc_context_create(&raw_ctx) != CC_OK) return kExitInternal;
  std::unique_ptr<cc_context, ContextDeleter> ctx(raw_ctx);

  if (!is_prime(prime)) {
    std::cerr << "charclass: --prime " << prime << " is not prime\n";
    return kExitInput;
  }
  if (cc_status s = cc_context_set_prime(ctx.get(), prime); s != CC_OK)
    return fail(ctx.get(), s, "--prime");
  cc_context_set_seed(ctx.get(), seed);
  cc_context_set_trials(ctx.get(), trials);
  cc_context_set_retries(ctx.get(), retries);
  cc_context_set_pair_budget(ctx.get(), budget);
  cc_context_set_union_mode(ctx.get(),
                            union_mode == "intersection" ? CC_UNION_INTERSECTION : CC_UNION_PRODUCT);

  cc_ideal* raw_ideal = nullptr;
  if (cc_status s = cc_ideal_read_file(ctx.get(), input.c_str(), &raw_ideal); s != CC_OK)
    return fail(ctx.get(), s, input);
  std::unique_ptr<cc_ideal, IdealDeleter> ideal(raw_ideal);

  const int max_degree = max_degree_encountered(ideal.get());
  if (static_cast<std::uint64_t>(prime) <= 2ull * static_cast<std::uint64_t>(max_degree)) {
    std::cerr << "charclass: --prime " << prime << " must exceed twice the largest degree ("
              << max_degree << ") met in the computation\n";
    return kExitInput;
  }

  std::set<std::string> wanted(classes.begin(), classes.end());
  unsigned flags = 0;
  if (wanted.count("all")) flags = CC_REQUEST_ALL;
  if (wanted.count("segre")) flags |= CC_REQUEST_SEGRE;
  if (wanted.count("sm-segre")) flags |= CC_REQUEST_SM_SEGRE;
  if (wanted.count("csm")) flags |= CC_REQUEST_CSM;
  if (wanted.count("fulton")) flags |= CC_REQUEST_FULTON;
  if (wanted.count("milnor")) flags |= CC_REQUEST_MILNOR;
  if (wanted.count("euler")) flags |= CC_REQUEST_EULER;

  cc_report* raw_report = nullptr;
  if (cc_status s = cc_compute_report(ctx.get(), ideal.get(), flags, &raw_report); s != CC_OK)
    return fail(ctx.get(), s, "computation");
  std::unique_ptr<cc_report, ReportDeleter> report(raw_report);

  char* raw_text = nullptr;
  cc_status s = format == "json" ? cc_report_to_json(report.get(), &raw_text)
                                 : cc_report_to_text(report.get(), &raw_text);
  if (s != CC_OK) return fail(ctx.get(), s, "rendering");
  std::unique_ptr<char, StringDeleter> text(raw_text);
  std::fputs(text.get(), stdout);
  return 0;
}
