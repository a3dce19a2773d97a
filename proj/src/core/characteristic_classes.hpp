#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow.hpp"
#include "ideal.hpp"
#include "segre.hpp"
#include "sm_segre.hpp"

namespace charclass {

// Which classes to compute. Dependencies (e.g. csm needs sm_segre) are
// resolved internally; only requested classes appear in the report.
struct ClassRequest {
  bool segre = false;
  bool sm_segre = false;
  bool csm = false;
  bool fulton = false;
  bool milnor = false;
  bool euler = false;

  static ClassRequest all() { return {true, true, true, true, true, true}; }
  bool any() const { return segre || sm_segre || csm || fulton || milnor || euler; }
};

struct ClassReport {
  std::size_t ambient_dim = 0;
  std::vector<std::string> variables;
  std::optional<ChowClass> segre;
  std::optional<ChowClass> sm_segre;
  std::optional<ChowClass> csm;
  std::optional<ChowClass> fulton;
  std::optional<ChowClass> milnor_measure;
  std::optional<ChowClass> milnor;
  std::optional<mpz_class> euler;
  // Echo of the Monte-Carlo parameters that produced the report.
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int retries = 0;
};

// c_SM(Z_red) = c(T P^n) s°(Z, P^n)
ChowClass csm(const IdealPresentation& ideal, const GenericityContext& ctx,
              UnionMode mode = UnionMode::product);
// c_F(Z) = c(T P^n) s(Z, P^n)
ChowClass fulton(const IdealPresentation& ideal, const GenericityContext& ctx);

struct MilnorClasses {
  ChowClass measure;  // s° - s
  ChowClass milnor;   // c(T P^n) (s° - s), no extra sign
};
MilnorClasses milnor(const IdealPresentation& ideal, const GenericityContext& ctx,
                     UnionMode mode = UnionMode::product);

// Degree of the CSM class: the topological Euler characteristic of Z_red.
mpz_class euler(const IdealPresentation& ideal, const GenericityContext& ctx,
                UnionMode mode = UnionMode::product);

// Computes each needed Segre-type class once and derives the rest. When
// both sides are present, csm - fulton == milnor is enforced.
ClassReport compute_report(const IdealPresentation& ideal, const GenericityContext& ctx,
                           const ClassRequest& request, UnionMode mode = UnionMode::product);

}  // namespace charclass
