#include "polynomial.hpp"

namespace charclass {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::not_zero_dimensional: return "not zero-dimensional";
    case ErrorKind::genericity_failure: return "genericity failure";
    case ErrorKind::trial_disagreement: return "trial disagreement";
    case ErrorKind::budget_exceeded: return "budget exceeded";
    case ErrorKind::subset_cap_exceeded: return "subset cap exceeded";
    case ErrorKind::bad_prime: return "bad prime";
    case ErrorKind::io: return "i/o error";
    case ErrorKind::internal: return "internal error";
  }
  return "unknown error";
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorKind::internal, "inverse of zero mod p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0)
    throw Error(ErrorKind::bad_prime,
                "prime " + std::to_string(p_) + " divides a coefficient denominator");
  auto n = from_int(num.get_si());
  return mul(n, inv(from_int(den.get_si())));
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

template <class Field>
std::string Polynomial<Field>::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = field_.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c;
      continue;
    }
    if (c != "1") {
      out += c.find('/') != std::string::npos ? "(" + c + ")" : c;
      out += '*';
    }
    out += t.monomial.to_string(names);
  }
  return out;
}

template class Polynomial<RationalField>;
template class Polynomial<PrimeField>;

FpPolynomial reduce_mod_p(const QPolynomial& f, const PrimeField& field) {
  return f.map_coefficients(field,
                            [&](const mpq_class& c) { return field.from_rational(c); });
}

QPolynomial primitive_part(const QPolynomial& f) {
  if (f.is_zero()) return f;
  mpz_class lcm_den = 1;
  for (const auto& t : f.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                          t.coeff.get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.get_num() * (lcm_den / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  mpq_class factor(lcm_den, content);
  factor.canonicalize();
  if (sgn(f.leading_term().coeff) < 0) factor = -factor;
  return f.scaled(factor);
}

}  // namespace charclass
