#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace charclass;
using fixtures::ideal;

namespace {

const PrimeField kField(32003);

std::vector<FpPolynomial> fp(const std::vector<std::string>& texts,
                             const std::vector<std::string>& vars) {
  std::vector<FpPolynomial> out;
  for (const auto& t : texts) out.push_back(reduce_mod_p(parse_polynomial(t, vars), kField));
  return out;
}

std::vector<std::string> render(const std::vector<FpPolynomial>& ps,
                                const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(vars));
  return out;
}

template <class Field>
void check_buchberger_criterion(const GroebnerBasis<Field>& G) {
  auto elems = G.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      CHECK(normal_form(s_polynomial(elems[i], elems[j], G.order()), G).is_zero());
}

template <class Field>
void check_ideal_members(const std::vector<Polynomial<Field>>& gens, const GroebnerBasis<Field>& G) {
  for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
}

bool contained_in(const IdealPresentation& small, const IdealPresentation& big) {
  auto G = groebner_basis(big.generators());
  for (const auto& g : small.generators())
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  const std::vector<std::string> xy{"x", "y"};
  SUBCASE("already a basis") {
    auto G = groebner_basis(fp({"x"}, xy));
    CHECK(render(G.elements(), xy) == std::vector<std::string>{"x"});
  }
  SUBCASE("hand Buchberger") {
    auto G = groebner_basis(fp({"x^2 - 1", "x*y - 1"}, xy));
    auto got = render(G.elements(), xy);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x - y", "y^2 - 1"});
    check_buchberger_criterion(G);
  }
  SUBCASE("monomial ideal") {
    auto G = groebner_basis(fp({"x^2", "x*y", "y^2"}, xy));
    CHECK(G.size() == 3);
    CHECK(quotient_dimension_count(G) == 3);
  }
  SUBCASE("unit ideal") {
    auto G = groebner_basis(fp({"x - 1", "x"}, xy));
    CHECK(G.is_unit_ideal());
    CHECK(normal_form(FpPolynomial::constant(kField, 2, 1), G).is_zero());
  }
  SUBCASE("monic output") {
    auto G = groebner_basis(fp({"3*x^2 + y^2", "5*x*y"}, xy));
    for (const auto& g : G.elements()) CHECK(g.leading_term().coeff == 1u);
  }
  SUBCASE("rational coefficients") {
    RationalField q;
    std::vector<QPolynomial> gens{parse_polynomial("x^2 - 1", xy), parse_polynomial("x*y - 1", xy)};
    auto G = groebner_basis(gens);
    check_buchberger_criterion(G);
    CHECK(quotient_dimension_count(G) == 2);
  }
}

TEST_CASE("normal_form examples") {
  const std::vector<std::string> xy{"x", "y"};
  auto G = groebner_basis(fp({"x^2"}, xy));
  CHECK(normal_form(fp({"x^2*y"}, xy)[0], G).is_zero());
  auto H = groebner_basis(fp({"x - y"}, xy));
  CHECK(normal_form(fp({"x + y"}, xy)[0], H) == fp({"2*y"}, xy)[0]);
}

TEST_CASE("quotient_dimension_count examples") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(quotient_dimension_count(groebner_basis(fp({"x - y", "y^2 - 1"}, xy))) == 2);
  CHECK(quotient_dimension_count(groebner_basis(fp({"x^2", "x*y", "y^2"}, xy))) == 3);
  try {
    quotient_dimension_count(groebner_basis(fp({"x"}, xy)));
    FAIL("expected not_zero_dimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_zero_dimensional);
  }
}

TEST_CASE("random ideals: members reduce to zero and S-pairs close") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FpPolynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(fixtures::random_sparse(kField, 3, 3, 4, rng));
    std::erase_if(gens, [](const FpPolynomial& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    auto G = groebner_basis(gens);
    check_ideal_members(gens, G);
    check_buchberger_criterion(G);
    auto E = groebner_basis(gens, MonomialOrder::elimination(1));
    check_ideal_members(gens, E);
    check_buchberger_criterion(E);
  }
}

TEST_CASE("graded pieces lie in the ideal") {
  for (const char* text : {"vars: x,y,z\nideal: x*y, x^2", "vars: x,y,z,w\nideal: x*z - y^2, y*w - z^2, x*w - y*z",
                           "vars: x,y,z\nideal: x, y^2 - z^2"}) {
    auto I = ideal(text);
    auto G = groebner_basis(I.generators());
    for (int d = I.max_degree(); d <= I.max_degree() + 1; ++d)
      for (const auto& f : graded_piece(I, d)) CHECK(normal_form(f, G).is_zero());
  }
}

TEST_CASE("Bezout count for generic dense forms") {
  std::mt19937_64 rng(8);
  for (std::size_t k = 1; k <= 3; ++k)
    for (unsigned d = 1; d <= 3; ++d) {
      std::vector<FpPolynomial> gens;
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < k; ++i) {
        unsigned di = (i % 2 == 0) ? d : std::max(1u, d - 1);
        gens.push_back(reduce_mod_p(fixtures::random_form(k, di, rng), kField));
        expected *= di;
      }
      CHECK(quotient_dimension_count(groebner_basis(gens)) == expected);
    }
}

TEST_CASE("budget exceeded") {
  GroebnerOptions tight;
  tight.max_pairs = 1;
  std::mt19937_64 rng(4);
  std::vector<FpPolynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(reduce_mod_p(fixtures::random_form(3, 3, rng), kField));
  try {
    groebner_basis(gens, MonomialOrder::degrevlex(), tight);
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}

TEST_CASE("elimination order") {
  auto order = MonomialOrder::elimination(1);
  CHECK(order.compare(Monomial{1, 0, 0}, Monomial{0, 3, 0}) > 0);
  CHECK(order.compare(Monomial{0, 2, 0}, Monomial{0, 1, 1}) > 0);
  const std::vector<std::string> txy{"t", "x", "y"};
  auto G = groebner_basis(fp({"t - x", "t - y"}, txy), order);
  bool found = false;
  for (const auto& g : G.elements())
    if (g.leading_term().monomial[0] == 0) found = g == fp({"x - y"}, txy)[0];
  CHECK(found);
}

TEST_CASE("intersect_ideals examples") {
  CHECK(intersect_ideals(ideal("vars: x,y,z\nideal: x"), ideal("vars: x,y,z\nideal: y")) ==
        ideal("vars: x,y,z\nideal: x*y"));
  CHECK(intersect_ideals(ideal("vars: x,y,z\nideal: x^2"), ideal("vars: x,y,z\nideal: x*y")) ==
        ideal("vars: x,y,z\nideal: x^2*y"));
  CHECK(intersect_ideals(ideal("vars: x,y,z\nideal: x"), ideal("vars: x,y,z\nideal: x, y")) ==
        ideal("vars: x,y,z\nideal: x"));
  CHECK_THROWS_AS(
      intersect_ideals(ideal("vars: x,y,z\nideal: x"), ideal("vars: x,y,z,w\nideal: x")), Error);
}

TEST_CASE("intersection sits between the product and each factor") {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"x, y", "x, z"},
      {"x*y - z*w", "z"},
      {"x^2, y", "x, y^2"},
      {"x*z - y^2, y*w - z^2, x*w - y*z", "x"},
      {"x + y, z^2", "y - w, x*z"}};
  for (const auto& [a, b] : pairs) {
    auto I = ideal("vars: x,y,z,w\nideal: " + a);
    auto J = ideal("vars: x,y,z,w\nideal: " + b);
    auto K = intersect_ideals(I, J);
    for (const auto& g : K.generators()) CHECK(g.is_homogeneous());
    CHECK(contained_in(K, I));
    CHECK(contained_in(K, J));
    CHECK(contained_in(product_ideal({I, J}), K));
  }
}
