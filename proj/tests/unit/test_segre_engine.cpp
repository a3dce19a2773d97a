#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace charclass;
using fixtures::cls;
using fixtures::ideal;

namespace {

const GenericityContext kCtx = fixtures::context();

std::vector<std::uint64_t> g(std::initializer_list<std::uint64_t> v) { return v; }

}  // namespace

TEST_CASE("projective_degrees examples") {
  CHECK(projective_degrees(ideal("vars: x,y,z\nideal: x, y"), kCtx).g == g({1, 1, 0}));
  CHECK(projective_degrees(ideal("vars: x,y,z\nideal: y^2*z - x^3"), kCtx).g == g({1, 0, 0}));
  CHECK(projective_degrees(ideal("vars: x,y,z,w\nideal: x*y - z*w"), kCtx).g == g({1, 0, 0, 0}));
  auto pd = projective_degrees(ideal("vars: x,y,z\nideal: x^2*y, x^3"), kCtx);
  CHECK(pd.g == g({1, 1, 0}));
  CHECK(pd.degree == 3);
  auto smooth_quadric_jacobian = ideal("vars: x,y,z,w\nideal: 2*x, 2*y, 2*z, 2*w");
  CHECK(projective_degrees(smooth_quadric_jacobian, kCtx).g == g({1, 1, 1, 1}));
}

TEST_CASE("projective degrees respect the Bezout bound") {
  for (const char* text :
       {"vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z", "vars: x,y,z\nideal: x*y, x^2",
        "vars: x,y,z,w\nideal: x*y - z*w, z"}) {
    auto pd = projective_degrees(ideal(text), kCtx);
    CHECK(pd.g.front() == 1);
    std::uint64_t bound = 1;
    for (auto gi : pd.g) {
      CHECK(gi <= bound);
      bound *= pd.degree;
    }
  }
}

TEST_CASE("segre_class examples") {
  CHECK(segre_class(ideal("vars: x,y,z\nideal: x, y"), kCtx) == cls(2, {0, 0, 1}));
  CHECK(segre_class(ideal("vars: x,y,z\nideal: x^2*y, x^3"), kCtx) == cls(2, {0, 2, -3}));
  CHECK(segre_class(ideal("vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z"), kCtx) ==
        cls(3, {0, 0, 3, -10}));
  auto jac = partial_derivatives(fixtures::poly("x*y - z*w", fixtures::vars(4)), fixtures::vars(4));
  CHECK(segre_class(jac, kCtx).is_zero());
  CHECK(segre_class(ideal("vars: x,y,z\nideal: x, 1"), kCtx).is_zero());
}

TEST_CASE("hypersurface law") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u})
    for (unsigned d = 1; d <= 4; ++d) {
      IdealPresentation I(fixtures::vars(n + 1), {fixtures::random_form(n + 1, d, rng)});
      CHECK(segre_class(I, kCtx) == ci_segre_oracle({long(d)}, n));
    }
  CHECK(segre_class(ideal("vars: x,y,z\nideal: x^2"), kCtx) == cls(2, {0, 2, -4}));
  CHECK(segre_class(ideal("vars: x,y,z\nideal: y^2*z - x^2*(x + z)"), kCtx) == cls(2, {0, 3, -9}));
}

TEST_CASE("complete intersection law") {
  const std::vector<std::pair<std::vector<unsigned>, std::size_t>> cases = {
      {{1}, 2},    {{2}, 2},       {{3}, 2},       {{1, 1}, 2},    {{2, 2}, 2},
      {{1, 1}, 3}, {{2, 1}, 3},    {{2, 2}, 3},    {{3, 2}, 3},    {{3, 3}, 3},
      {{1, 1, 1}, 3}, {{2, 2, 2}, 3}, {{2, 1, 1}, 3}};
  std::uint64_t seed = 100;
  for (const auto& [degrees, n] : cases) {
    CAPTURE(n);
    CAPTURE(degrees.size());
    auto I = fixtures::generic_complete_intersection(degrees, n, seed++);
    std::vector<long> ds(degrees.begin(), degrees.end());
    CHECK(segre_class(I, kCtx) == ci_segre_oracle(ds, n));
  }
}

TEST_CASE("generating-set independence") {
  std::mt19937_64 rng(9);
  for (const char* text : {"vars: x,y,z\nideal: x*y, x^2", "vars: x,y,z,w\nideal: x*y - z*w, z",
                           "vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z"}) {
    auto I = ideal(text);
    auto base = segre_class(I, kCtx);
    auto gens = I.generators();
    QPolynomial extra(gens[0].field(), I.nvars());
    for (const auto& f : gens) {
      if (f.total_degree() != I.max_degree()) continue;
      extra += f.scaled(mpq_class(long(rng() % 7) + 1));
    }
    auto with_extra = gens;
    with_extra.push_back(extra);
    CHECK(segre_class(I.with_generators(with_extra), kCtx) == base);
    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(segre_class(I.with_generators(reversed), kCtx) == base);
  }
}

TEST_CASE("degree-raising independence") {
  for (const char* text : {"vars: x,y,z\nideal: x, y", "vars: x,y,z\nideal: x*y, x^2",
                           "vars: x,y,z,w\nideal: x*y - z*w, z", "vars: x,y,z\nideal: x^2*y, x^3"}) {
    auto I = ideal(text);
    CHECK(segre_class(I, kCtx) == segre_class(I, kCtx, I.max_degree() + 1));
  }
}

TEST_CASE("determinism and seed independence") {
  auto I = ideal("vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z");
  auto a = projective_degrees(I, fixtures::context(7));
  auto b = projective_degrees(I, fixtures::context(7));
  CHECK(a == b);
  CHECK(projective_degrees(I, fixtures::context(12345)) == a);
  CHECK(derive_seed(7, "abc") == derive_seed(7, "abc"));
  CHECK(derive_seed(7, "abc") != derive_seed(8, "abc"));
  CHECK(derive_seed(7, "abc") != derive_seed(7, "abd"));
}

TEST_CASE("slicing strategies agree draw by draw") {
  GenericityContext full = kCtx;
  full.slicing = SliceStrategy::full_system;
  for (const char* text : {"vars: x,y,z\nideal: x*y, x^2", "vars: x,y,z,w\nideal: x*y - z*w, z",
                           "vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z",
                           "vars: x,y,z\nideal: x^2*y, x^3"}) {
    auto I = ideal(text);
    for (std::size_t i = 0; i <= I.ambient_dim(); ++i)
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        CAPTURE(text);
        CAPTURE(i);
        CHECK(projective_degree_slice(I, I.max_degree(), i, seed, kCtx) ==
              projective_degree_slice(I, I.max_degree(), i, seed, full));
      }
    CHECK(projective_degrees(I, full) == projective_degrees(I, kCtx));
  }
}

TEST_CASE("result cache") {
  GenericityContext ctx = kCtx;
  ctx.cache = std::make_shared<ResultCache>();
  auto I = ideal("vars: x,y,z\nideal: x*y, x^2");
  auto first = segre_class(I, ctx);
  CHECK(ctx.cache->size() >= 1);
  CHECK(segre_class(I, ctx) == first);
}

TEST_CASE("context validation") {
  GenericityContext ctx = kCtx;
  ctx.prime = 32002;
  CHECK_THROWS_AS(ctx.validate(), Error);
  ctx = kCtx;
  ctx.trials = 0;
  CHECK_THROWS_AS(ctx.validate(), Error);
  ctx = kCtx;
  ctx.retries = 0;
  CHECK_THROWS_AS(ctx.validate(), Error);
  ctx = kCtx;
  ctx.prime = 3;
  try {
    segre_class(ideal("vars: x,y,z\nideal: x^3"), ctx);
    FAIL("expected bad_prime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bad_prime);
  }
}

TEST_CASE("budget failures surface as errors") {
  GenericityContext ctx = kCtx;
  ctx.groebner.max_pairs = 1;
  try {
    segre_class(ideal("vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z"), ctx);
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}

TEST_CASE("segre_from_projective_degrees") {
  CHECK(segre_from_projective_degrees({{1, 1, 0}, 3}, 2) == cls(2, {0, 2, -3}));
  CHECK(segre_from_projective_degrees({{1, 0, 0}, 2}, 2) == cls(2, {0, 2, -4}));
  CHECK(segre_from_projective_degrees({{1, 1, 1, 1}, 1}, 3).is_zero());
}

TEST_CASE("classes are stable across master seeds") {
  const std::vector<std::pair<std::string, ChowClass>> cases = {
      {"vars: x,y,z\nideal: x*y, x^2", cls(2, {0, 1, 0})},
      {"vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z", cls(3, {0, 0, 3, -10})},
      {"vars: x,y,z,w\nideal: x*y - z*w, z", cls(3, {0, 0, 2, -6})},
      {"vars: x,y,z\nideal: x^2*y, x^3", cls(2, {0, 2, -3})}};
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    for (const auto& [text, expected] : cases) {
      CAPTURE(seed);
      CAPTURE(text);
      CHECK(segre_class(ideal(text), fixtures::context(seed)) == expected);
    }
}
