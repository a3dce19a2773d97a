#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chow.hpp"
#include "groebner.hpp"
#include "ideal.hpp"

namespace charclass {

// Memo of finished class computations, keyed by everything that determines
// the result (ideal text, prime, seed, trial and retry counts). Thread-safe.
class ResultCache {
 public:
  std::optional<ChowClass> find(const std::string& key) const;
  void insert(const std::string& key, const ChowClass& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, ChowClass> entries_;
};

// How the linear part of each random slice is handled. Both count the same
// solutions; `full_system` hands all n+2 variables to the Groebner engine,
// `linear_substitution` first solves the linear equations and substitutes.
enum class SliceStrategy { linear_substitution, full_system };

struct GenericityContext {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 3;
  int retries = 5;
  GroebnerOptions groebner{};
  SliceStrategy slicing = SliceStrategy::linear_substitution;
  std::shared_ptr<ResultCache> cache{};

  // Throws bad_prime / invalid_input.
  void validate() const;
  // Identity of the Monte-Carlo parameters, used in cache keys.
  std::string fingerprint() const;
};

// Projective degrees (g_0, ..., g_n) of the rational map P^n --> P^N given by
// a basis of the degree-d piece of the ideal.
struct ProjectiveDegrees {
  std::vector<std::uint64_t> g;
  int degree = 0;

  friend bool operator==(const ProjectiveDegrees&, const ProjectiveDegrees&) = default;
};

// Stable per-task seed: mixes the master seed with a label naming the task.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

// `degree` defaults to the largest generator degree and may be raised.
ProjectiveDegrees projective_degrees(const IdealPresentation& ideal, const GenericityContext& ctx,
                                     std::optional<int> degree = std::nullopt);

// Solution count of a single random slice for g_i (one trial). Exposed for
// tests that compare the two slicing strategies draw by draw.
std::uint64_t projective_degree_slice(const IdealPresentation& ideal, int degree, std::size_t i,
                                      std::uint64_t seed, const GenericityContext& ctx);

// s(Z, P^n) = 1 - c(O(dH))^{-1} (G ⊗ O(dH)) with G = sum g_i H^i.
ChowClass segre_from_projective_degrees(const ProjectiveDegrees& degrees, std::size_t n);

// Conventional Segre class s(Z, P^n); zero for the empty scheme.
ChowClass segre_class(const IdealPresentation& ideal, const GenericityContext& ctx,
                      std::optional<int> degree = std::nullopt);

}  // namespace charclass
