#include "groebner.hpp"

#include <algorithm>
#include <limits>

namespace charclass {

namespace {

int compare_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) noexcept {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::uint32_t divmask(const Monomial& m) noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) mask |= 1u << i;
  return mask;
}

template <class Field>
using TermsOf = std::vector<typename Polynomial<Field>::Term>;

template <class Field>
TermsOf<Field> to_ordered(const Polynomial<Field>& f, const MonomialOrder& order) {
  TermsOf<Field> terms = f.terms();
  if (order.kind() != MonomialOrder::Kind::degrevlex) {
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  }
  return terms;
}

template <class Field>
void make_monic(const Field& field, TermsOf<Field>& terms) {
  if (terms.empty() || field.is_one(terms.front().coeff)) return;
  auto inv = field.inv(terms.front().coeff);
  for (auto& t : terms) t.coeff = field.mul(t.coeff, inv);
}

// out = a[a_from..] - c * q * g[g_from..]; both inputs sorted by `order`.
template <class Field>
void sub_scaled_shifted(const Field& field, const MonomialOrder& order, const TermsOf<Field>& a,
                        std::size_t a_from, const typename Field::value_type& c,
                        const Monomial& q, const TermsOf<Field>& g, std::size_t g_from,
                        TermsOf<Field>& out) {
  out.clear();
  out.reserve(a.size() - a_from + g.size() - g_from);
  std::size_t i = a_from, j = g_from;
  bool degrevlex = order.kind() == MonomialOrder::Kind::degrevlex;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].monomial * q;
    int cmp = degrevlex ? compare_degrevlex(a[i].monomial, gm) : order.compare(a[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, field.neg(field.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto v = field.sub_mul(a[i].coeff, c, g[j].coeff);
      if (!field.is_zero(v)) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].monomial * q, field.neg(field.mul(c, g[j].coeff))});
}

template <class Field>
class Buchberger {
 public:
  using Terms = TermsOf<Field>;

  Buchberger(const Field& field, std::size_t nvars, MonomialOrder order,
             const GroebnerOptions& options)
      : field_(field), nvars_(nvars), order_(order), options_(options) {}

  GroebnerBasis<Field> run(const std::vector<Polynomial<Field>>& generators) {
    for (const auto& g : generators) {
      if (g.nvars() != nvars_)
        throw Error(ErrorKind::dimension_mismatch, "generators live in different rings");
      Terms h = reduce(to_ordered(g, order_), basis_);
      if (h.empty()) continue;
      if (add(std::move(h))) return unit();
    }

    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (order_.compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++processed > options_.max_pairs)
        throw Error(ErrorKind::budget_exceeded,
                    "Groebner basis computation exceeded " +
                        std::to_string(options_.max_pairs) + " S-pairs");
      Terms h = reduce(s_poly(p), basis_);
      if (h.empty()) continue;
      if (add(std::move(h))) return unit();
    }
    return finish();
  }

  // Full reduction of f by the polynomials indexed by `reducers`.
  Terms reduce(Terms f, const std::vector<std::size_t>& reducers) const {
    Terms out, scratch;
    std::size_t start = 0;
    while (start < f.size()) {
      const auto& lead = f[start];
      std::size_t r = find_reducer(lead.monomial, reducers);
      if (r == npos) {
        out.push_back(lead);
        ++start;
        continue;
      }
      const Terms& g = polys_[r];
      Monomial q = lead.monomial.quotient(lm_[r]);
      auto c = lead.coeff;  // reducers are monic
      sub_scaled_shifted(field_, order_, f, start + 1, c, q, g, 1, scratch);
      std::swap(f, scratch);
      start = 0;
    }
    return out;
  }

  void load(std::vector<Terms> monic_elements) {
    for (auto& e : monic_elements) {
      basis_.push_back(store(std::move(e)));
    }
  }

  std::vector<std::size_t> all() const { return basis_; }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  std::size_t store(Terms t) {
    lm_.push_back(t.front().monomial);
    mask_.push_back(divmask(t.front().monomial));
    polys_.push_back(std::move(t));
    return polys_.size() - 1;
  }

  std::size_t find_reducer(const Monomial& m, const std::vector<std::size_t>& reducers) const {
    std::uint32_t mm = divmask(m);
    for (std::size_t idx : reducers) {
      if (mask_[idx] & ~mm) continue;
      if (lm_[idx].divides(m)) return idx;
    }
    return npos;
  }

  Terms s_poly(const Pair& p) const {
    const Terms& f = polys_[p.i];
    const Terms& g = polys_[p.j];
    Monomial qf = p.lcm.quotient(lm_[p.i]);
    Monomial qg = p.lcm.quotient(lm_[p.j]);
    Terms shifted;
    shifted.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k)
      shifted.push_back({f[k].monomial * qf, f[k].coeff});
    Terms out;
    sub_scaled_shifted(field_, order_, shifted, 0, field_.one(), qg, g, 1, out);
    return out;
  }

  // Returns true when the ideal became the unit ideal.
  bool add(Terms h) {
    make_monic(field_, h);
    if (h.front().monomial.is_one()) return true;
    std::size_t idx = store(std::move(h));
    update(idx);
    return false;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = lm_[h];
    std::vector<Pair> candidates;
    candidates.reserve(basis_.size());
    for (std::size_t g : basis_) candidates.push_back({g, h, lm_[g].lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = lm_[p.i].coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
          if (candidates[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (kept[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lm_[p.i].lcm(lh) == p.lcm) &&
                  !(lm_[p.j].lcm(lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!lm_[p.i].coprime(lh)) next.push_back(p);
    pairs_ = std::move(next);

    std::vector<std::size_t> basis;
    for (std::size_t g : basis_)
      if (!lh.divides(lm_[g])) basis.push_back(g);
    basis.push_back(h);
    basis_ = std::move(basis);
  }

  GroebnerBasis<Field> unit() const {
    Terms one{{Monomial(nvars_), field_.one()}};
    return GroebnerBasis<Field>(field_, nvars_, order_, {one});
  }

  GroebnerBasis<Field> finish() {
    std::vector<std::size_t> order = basis_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(lm_[a], lm_[b]) < 0;
    });
    std::vector<Terms> reduced;
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t l = 0; l < order.size(); ++l)
        if (l != k) others.push_back(order[l]);
      const Terms& g = polys_[order[k]];
      Terms tail(g.begin() + 1, g.end());
      Terms r{g.front()};
      Terms tail_nf = reduce(std::move(tail), others);
      r.insert(r.end(), tail_nf.begin(), tail_nf.end());
      reduced.push_back(std::move(r));
    }
    return GroebnerBasis<Field>(field_, nvars_, order_, std::move(reduced));
  }

  const Field& field_;
  std::size_t nvars_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<Terms> polys_;
  std::vector<Monomial> lm_;
  std::vector<std::uint32_t> mask_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == Kind::degrevlex) return compare_degrevlex(a, b);
  int c = compare_degrevlex_range(a, b, 0, block_);
  if (c != 0) return c;
  return compare_degrevlex_range(a, b, block_, a.nvars());
}

template <class Field>
GroebnerBasis<Field>::GroebnerBasis(Field field, std::size_t nvars, MonomialOrder order,
                                    std::vector<Terms> elements)
    : field_(std::move(field)), nvars_(nvars), order_(order), ordered_(std::move(elements)) {
  for (const auto& e : ordered_) leading_.push_back(e.front().monomial);
}

template <class Field>
std::vector<Polynomial<Field>> GroebnerBasis<Field>::elements() const {
  std::vector<Polynomial<Field>> out;
  for (const auto& e : ordered_) out.push_back(Polynomial<Field>::from_terms(field_, nvars_, e));
  return out;
}

template class GroebnerBasis<PrimeField>;
template class GroebnerBasis<RationalField>;

template <class Field>
GroebnerBasis<Field> groebner_basis(const std::vector<Polynomial<Field>>& generators,
                                    MonomialOrder order, const GroebnerOptions& options) {
  if (generators.empty()) throw Error(ErrorKind::invalid_input, "no generators");
  Field field = generators.front().field();
  Buchberger<Field> engine(field, generators.front().nvars(), order, options);
  return engine.run(generators);
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& basis) {
  if (f.nvars() != basis.nvars())
    throw Error(ErrorKind::dimension_mismatch, "normal form across different rings");
  Buchberger<Field> engine(basis.field(), basis.nvars(), basis.order(), {});
  engine.load(basis.ordered_elements());
  auto r = engine.reduce(to_ordered(f, basis.order()), engine.all());
  return Polynomial<Field>::from_terms(basis.field(), basis.nvars(), std::move(r));
}

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g,
                               const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) return Polynomial<Field>(f.field(), f.nvars());
  const Field& field = f.field();
  auto tf = to_ordered(f, order);
  auto tg = to_ordered(g, order);
  Monomial l = tf.front().monomial.lcm(tg.front().monomial);
  auto a = Polynomial<Field>::term(field, l.quotient(tf.front().monomial),
                                   field.inv(tf.front().coeff));
  auto b = Polynomial<Field>::term(field, l.quotient(tg.front().monomial),
                                   field.inv(tg.front().coeff));
  return a * f - b * g;
}

template <class Field>
std::uint64_t quotient_dimension_count(const GroebnerBasis<Field>& basis) {
  const auto& lms = basis.leading_monomials();
  for (const Monomial& m : lms)
    if (m.is_one()) return 0;
  std::size_t n = basis.nvars();
  std::vector<unsigned> bound(n, 0);
  for (const Monomial& m : lms) {
    int v = m.pure_power_variable();
    if (v < 0) continue;
    unsigned e = m[static_cast<std::size_t>(v)];
    if (bound[v] == 0 || e < bound[v]) bound[v] = e;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] == 0)
      throw Error(ErrorKind::not_zero_dimensional,
                  "ideal is not zero-dimensional (no pure power of variable " +
                      std::to_string(v) + " among the leading monomials)");

  auto divisible = [&](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  std::uint64_t count = 0;
  Monomial m(n);
  // Depth-first over exponent vectors; a divisible prefix prunes every
  // larger exponent of the current variable.
  auto rec = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[var]; ++e) {
      m.set(var, e);
      if (divisible(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  rec(rec, 0);
  return count;
}

template GroebnerBasis<PrimeField> groebner_basis(const std::vector<FpPolynomial>&,
                                                  MonomialOrder, const GroebnerOptions&);
template GroebnerBasis<RationalField> groebner_basis(const std::vector<QPolynomial>&,
                                                     MonomialOrder, const GroebnerOptions&);
template FpPolynomial normal_form(const FpPolynomial&, const GroebnerBasis<PrimeField>&);
template QPolynomial normal_form(const QPolynomial&, const GroebnerBasis<RationalField>&);
template FpPolynomial s_polynomial(const FpPolynomial&, const FpPolynomial&,
                                   const MonomialOrder&);
template QPolynomial s_polynomial(const QPolynomial&, const QPolynomial&, const MonomialOrder&);
template std::uint64_t quotient_dimension_count(const GroebnerBasis<PrimeField>&);
template std::uint64_t quotient_dimension_count(const GroebnerBasis<RationalField>&);

IdealPresentation intersect_ideals(const IdealPresentation& a, const IdealPresentation& b,
                                   const GroebnerOptions& options) {
  if (a.variables() != b.variables())
    throw Error(ErrorKind::dimension_mismatch, "intersection of ideals in different rings");
  const std::size_t n = a.nvars();
  const std::size_t big = n + 1;  // t is variable 0
  RationalField q;

  auto lift = [&](const QPolynomial& f) {
    std::vector<QPolynomial::Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m(big);
      for (std::size_t i = 0; i < n; ++i) m.set(i + 1, t.monomial[i]);
      terms.push_back({m, t.coeff});
    }
    return QPolynomial::from_terms(q, big, std::move(terms));
  };
  QPolynomial t = QPolynomial::variable(q, big, 0);
  QPolynomial one_minus_t = QPolynomial::constant(q, big, 1) - t;

  std::vector<QPolynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * lift(f));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(g));

  auto basis = groebner_basis(gens, MonomialOrder::elimination(1), options);

  std::vector<QPolynomial> out;
  for (const auto& e : basis.elements()) {
    bool free_of_t = std::all_of(e.terms().begin(), e.terms().end(),
                                 [](const auto& term) { return term.monomial[0] == 0; });
    if (!free_of_t) continue;
    // Split into homogeneous components; each lies in the (homogeneous) ideal.
    std::vector<std::vector<QPolynomial::Term>> by_degree;
    for (const auto& term : e.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, term.monomial[i + 1]);
      if (by_degree.size() <= m.degree()) by_degree.resize(m.degree() + 1);
      by_degree[m.degree()].push_back({m, term.coeff});
    }
    for (auto it = by_degree.rbegin(); it != by_degree.rend(); ++it) {
      if (it->empty()) continue;
      QPolynomial piece = primitive_part(QPolynomial::from_terms(q, n, std::move(*it)));
      if (std::find(out.begin(), out.end(), piece) == out.end()) out.push_back(std::move(piece));
    }
  }
  return a.with_generators(std::move(out));
}

}  // namespace charclass
