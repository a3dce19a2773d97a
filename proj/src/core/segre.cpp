#include "segre.hpp"

#include <random>

namespace charclass {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class SliceDraw {
 public:
  SliceDraw(const PrimeField& field, std::uint64_t seed) : field_(field), rng_(seed) {}

  PrimeField::value_type coefficient() { return static_cast<PrimeField::value_type>(rng_() % field_.characteristic()); }

  FpPolynomial random_form(std::size_t nvars, unsigned degree) {
    std::vector<FpPolynomial::Term> terms;
    for (const Monomial& m : monomials_of_degree(nvars, degree)) terms.push_back({m, coefficient()});
    return FpPolynomial::from_terms(field_, nvars, std::move(terms));
  }

  // Random element of I_d, i.e. a random combination of graded_piece(I, d):
  // sum_j h_j f_j with h_j a random form of degree d - deg f_j.
  FpPolynomial random_member(const std::vector<FpPolynomial>& gens, unsigned degree) {
    FpPolynomial acc(field_, gens.front().nvars());
    for (const auto& f : gens)
      acc += random_form(f.nvars(), degree - static_cast<unsigned>(f.total_degree())) * f;
    return acc;
  }

  std::vector<PrimeField::value_type> random_vector(std::size_t n) {
    std::vector<PrimeField::value_type> v(n);
    for (auto& x : v) x = coefficient();
    return v;
  }

 private:
  const PrimeField& field_;
  std::mt19937_64 rng_;
};

// Homomorphism x_j -> images[j] into a ring with target_nvars variables.
FpPolynomial substitute(const FpPolynomial& p, const std::vector<FpPolynomial>& images,
                        std::size_t target_nvars) {
  const PrimeField& field = p.field();
  std::vector<std::vector<FpPolynomial>> powers(images.size());
  auto power = [&](std::size_t j, unsigned e) -> const FpPolynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(FpPolynomial::constant(field, target_nvars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  std::vector<FpPolynomial::Term> out;
  for (const auto& t : p.terms()) {
    FpPolynomial acc = FpPolynomial::constant(field, target_nvars, t.coeff);
    for (std::size_t j = 0; j < images.size(); ++j)
      if (t.monomial[j] != 0) acc *= power(j, t.monomial[j]);
    out.insert(out.end(), acc.terms().begin(), acc.terms().end());
  }
  return FpPolynomial::from_terms(field, target_nvars, std::move(out));
}

// Embeds a polynomial in nvars variables into a ring with one more (trailing) variable.
FpPolynomial extend_ring(const FpPolynomial& p, std::size_t nvars) {
  std::vector<FpPolynomial::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(nvars);
    for (std::size_t j = 0; j < p.nvars(); ++j) m.set(j, t.monomial[j]);
    terms.push_back({m, t.coeff});
  }
  return FpPolynomial::from_terms(p.field(), nvars, std::move(terms));
}

// 1 - T * p0 with T the last variable of p0's ring.
FpPolynomial rabinowitsch(const FpPolynomial& p0) {
  const std::size_t n = p0.nvars();
  auto t = FpPolynomial::variable(p0.field(), n, n - 1);
  return FpPolynomial::constant(p0.field(), n, 1) - t * p0;
}

struct DegenerateDraw {};

// Parametrizes {L_1 = ... = L_k = 0, L_aff = 1} as x = x0 + N u, returning the
// images of x_j in a ring with (free count + 1) variables, the last being T.
std::vector<FpPolynomial> parametrize_slice(const PrimeField& field,
                                            std::vector<std::vector<PrimeField::value_type>> rows) {
  const std::size_t m = rows.size();
  const std::size_t ncols = rows.front().size();
  std::vector<PrimeField::value_type> rhs(m, 0);
  rhs.back() = 1;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    auto inv = field.inv(rows[r][c]);
    for (auto& v : rows[r]) v = field.mul(v, inv);
    rhs[r] = field.mul(rhs[r], inv);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == r || rows[k][c] == 0) continue;
      auto f = rows[k][c];
      for (std::size_t cc = 0; cc < ncols; ++cc) rows[k][cc] = field.sub_mul(rows[k][cc], f, rows[r][cc]);
      rhs[k] = field.sub_mul(rhs[k], f, rhs[r]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < m) throw DegenerateDraw{};

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, k = 0; c < ncols; ++c) {
    if (k < pivot_col.size() && pivot_col[k] == c) {
      ++k;
      continue;
    }
    free_cols.push_back(c);
  }
  const std::size_t target = free_cols.size() + 1;
  std::vector<FpPolynomial> images(ncols, FpPolynomial(field, target));
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    images[free_cols[k]] = FpPolynomial::variable(field, target, k);
  for (std::size_t row = 0; row < pivot_col.size(); ++row) {
    FpPolynomial img = FpPolynomial::constant(field, target, rhs[row]);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      auto a = rows[row][free_cols[k]];
      if (a != 0) img -= FpPolynomial::variable(field, target, k).scaled(a);
    }
    images[pivot_col[row]] = std::move(img);
  }
  return images;
}

std::vector<FpPolynomial> reduce_generators(const IdealPresentation& ideal, const PrimeField& field) {
  std::vector<FpPolynomial> gens;
  for (const auto& g : ideal.generators()) {
    FpPolynomial r = reduce_mod_p(g, field);
    if (r.is_zero() || r.total_degree() != g.total_degree())
      throw Error(ErrorKind::bad_prime, "generator " + g.to_string(ideal.variables()) +
                                            " degenerates modulo " +
                                            std::to_string(field.characteristic()));
    gens.push_back(std::move(r));
  }
  return gens;
}

std::uint64_t count_slice(const std::vector<FpPolynomial>& gens, std::size_t n, unsigned degree,
                          std::size_t i, std::uint64_t seed, const GenericityContext& ctx) {
  const PrimeField& field = gens.front().field();
  SliceDraw draw(field, seed);
  std::vector<FpPolynomial> members;
  for (std::size_t k = 0; k <= i; ++k) members.push_back(draw.random_member(gens, degree));
  std::vector<std::vector<PrimeField::value_type>> linear;
  for (std::size_t k = 0; k < n - i + 1; ++k) linear.push_back(draw.random_vector(n + 1));

  std::vector<FpPolynomial> system;
  if (ctx.slicing == SliceStrategy::full_system) {
    const std::size_t big = n + 2;
    for (std::size_t k = 1; k <= i; ++k) system.push_back(extend_ring(members[k], big));
    for (std::size_t k = 0; k < linear.size(); ++k) {
      std::vector<FpPolynomial::Term> terms;
      for (std::size_t j = 0; j <= n; ++j) terms.push_back({Monomial::variable(big, j), linear[k][j]});
      auto form = FpPolynomial::from_terms(field, big, std::move(terms));
      if (k + 1 == linear.size()) form -= FpPolynomial::constant(field, big, 1);
      system.push_back(std::move(form));
    }
    system.push_back(rabinowitsch(extend_ring(members[0], big)));
  } else {
    std::vector<FpPolynomial> images = parametrize_slice(field, linear);
    const std::size_t target = i + 1;
    for (std::size_t k = 1; k <= i; ++k) system.push_back(substitute(members[k], images, target));
    system.push_back(rabinowitsch(substitute(members[0], images, target)));
  }
  auto basis = groebner_basis(system, MonomialOrder::degrevlex(), ctx.groebner);
  return quotient_dimension_count(basis);
}

}  // namespace

std::optional<ChowClass> ResultCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::insert(const std::string& key, const ChowClass& value) {
  std::lock_guard lock(mutex_);
  entries_.emplace(key, value);
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void GenericityContext::validate() const {
  PrimeField check(prime);
  if (trials < 1) throw Error(ErrorKind::invalid_input, "trials must be at least 1");
  if (retries < 1) throw Error(ErrorKind::invalid_input, "retries must be at least 1");
}

std::string GenericityContext::fingerprint() const {
  return "p=" + std::to_string(prime) + ";seed=" + std::to_string(seed) +
         ";trials=" + std::to_string(trials) + ";retries=" + std::to_string(retries) +
         ";slicing=" + (slicing == SliceStrategy::full_system ? "full" : "subst");
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return splitmix64(master ^ splitmix64(h));
}

std::uint64_t projective_degree_slice(const IdealPresentation& ideal, int degree, std::size_t i,
                                      std::uint64_t seed, const GenericityContext& ctx) {
  ctx.validate();
  PrimeField field(ctx.prime);
  if (degree < ideal.max_degree())
    throw Error(ErrorKind::invalid_input, "linear system degree below a generator degree");
  if (i > ideal.ambient_dim()) throw Error(ErrorKind::invalid_input, "index beyond ambient dimension");
  try {
    return count_slice(reduce_generators(ideal, field), ideal.ambient_dim(),
                       static_cast<unsigned>(degree), i, seed, ctx);
  } catch (const DegenerateDraw&) {
    throw Error(ErrorKind::not_zero_dimensional, "linear slice equations are dependent");
  }
}

ProjectiveDegrees projective_degrees(const IdealPresentation& ideal, const GenericityContext& ctx,
                                     std::optional<int> degree) {
  ctx.validate();
  PrimeField field(ctx.prime);
  const int d = degree.value_or(ideal.max_degree());
  if (d < ideal.max_degree())
    throw Error(ErrorKind::invalid_input, "linear system degree " + std::to_string(d) +
                                              " is below a generator degree");
  if (static_cast<std::uint64_t>(d) + 1 >= ctx.prime)
    throw Error(ErrorKind::bad_prime, "prime " + std::to_string(ctx.prime) +
                                          " does not exceed the degrees involved");
  const std::size_t n = ideal.ambient_dim();
  const auto gens = reduce_generators(ideal, field);
  const std::string base = "pd|" + ideal.to_string() + "|d=" + std::to_string(d);

  ProjectiveDegrees out;
  out.degree = d;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::uint64_t> values;
    for (int trial = 0; trial < ctx.trials; ++trial) {
      std::optional<std::uint64_t> value;
      for (int attempt = 0; attempt < ctx.retries && !value; ++attempt) {
        std::string label = base + "|i=" + std::to_string(i) + "|trial=" + std::to_string(trial) +
                            "|retry=" + std::to_string(attempt);
        try {
          value = count_slice(gens, n, static_cast<unsigned>(d), i, derive_seed(ctx.seed, label), ctx);
        } catch (const DegenerateDraw&) {
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::not_zero_dimensional) throw;
        }
      }
      if (!value)
        throw Error(ErrorKind::genericity_failure,
                    "projective degree g_" + std::to_string(i) + " of (" +
                        ideal.generators_string() + "): no zero-dimensional slice in " +
                        std::to_string(ctx.retries) +
                        " draws; retry with another --seed, a larger --prime or more --retries");
      values.push_back(*value);
    }
    for (std::uint64_t v : values) {
      if (v != values.front()) {
        std::string list;
        for (std::uint64_t w : values) list += (list.empty() ? "" : ", ") + std::to_string(w);
        throw Error(ErrorKind::trial_disagreement,
                    "projective degree g_" + std::to_string(i) + " of (" +
                        ideal.generators_string() + ") disagrees across trials: " + list +
                        "; retry with another --seed or a larger --prime");
      }
    }
    out.g.push_back(values.front());
  }
  return out;
}

ChowClass segre_from_projective_degrees(const ProjectiveDegrees& degrees, std::size_t n) {
  if (degrees.g.size() != n + 1)
    throw Error(ErrorKind::dimension_mismatch, "projective degree vector has the wrong length");
  ChowClass g(n);
  for (std::size_t i = 0; i <= n; ++i) g[i] = mpz_class(std::to_string(degrees.g[i]));
  const long d = degrees.degree;
  ChowClass s = ChowClass::one(n) - truncated_inverse(line_bundle_chern(n, d)) * tensor_by(g, d);
  if (s[0] != 0)
    throw Error(ErrorKind::internal, "Segre class has a nonzero codimension-0 term (g_0 != 1?)");
  return s;
}

ChowClass segre_class(const IdealPresentation& ideal, const GenericityContext& ctx,
                      std::optional<int> degree) {
  const std::size_t n = ideal.ambient_dim();
  if (ideal.has_unit_generator()) return ChowClass(n);
  std::string key;
  if (ctx.cache) {
    key = "segre|" + ctx.fingerprint() + "|d=" + std::to_string(degree.value_or(-1)) + "|" +
          ideal.to_string();
    if (auto hit = ctx.cache->find(key)) return *hit;
  }
  ChowClass s = segre_from_projective_degrees(projective_degrees(ideal, ctx, degree), n);
  if (ctx.cache) ctx.cache->insert(key, s);
  return s;
}

}  // namespace charclass
