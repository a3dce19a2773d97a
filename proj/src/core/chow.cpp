#include "chow.hpp"

#include "error.hpp"

namespace charclass {

namespace {

void check_same(const ChowClass& a, const ChowClass& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch,
                "classes on P^" + std::to_string(a.ambient_dim()) + " and P^" +
                    std::to_string(b.ambient_dim()));
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Renders sum c_p * label(p), skipping zeros.
template <class Label>
std::string render(const std::vector<mpz_class>& c, Label label) {
  std::string out;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    mpz_class mag = abs(c[p]);
    std::string l = label(p);
    if (out.empty()) {
      if (c[p] < 0) out += '-';
    } else {
      out += c[p] < 0 ? " - " : " + ";
    }
    if (l.empty()) out += mag.get_str();
    else if (mag == 1) out += l;
    else out += mag.get_str() + l;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ChowClass::ChowClass(std::size_t ambient_dim, std::vector<mpz_class> coeffs)
    : n_(ambient_dim), c_(std::move(coeffs)) {
  for (std::size_t p = n_ + 1; p < c_.size(); ++p)
    if (c_[p] != 0)
      throw Error(ErrorKind::invalid_input, "class has a component beyond codimension n");
  c_.resize(n_ + 1);
}

ChowClass::ChowClass(std::size_t ambient_dim, std::initializer_list<long> coeffs)
    : ChowClass(ambient_dim, std::vector<mpz_class>(coeffs.begin(), coeffs.end())) {}

ChowClass ChowClass::hyperplane_power(std::size_t n, std::size_t p, long coeff) {
  ChowClass r(n);
  if (p <= n) r.c_[p] = coeff;
  return r;
}

bool ChowClass::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  check_same(*this, o);
  for (std::size_t p = 0; p <= n_; ++p) c_[p] += o.c_[p];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  check_same(*this, o);
  for (std::size_t p = 0; p <= n_; ++p) c_[p] -= o.c_[p];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) { return truncated_mul(a, b); }

std::string ChowClass::to_h_string() const {
  return render(c_, [](std::size_t p) -> std::string {
    if (p == 0) return "";
    if (p == 1) return "H";
    return "H^" + std::to_string(p);
  });
}

std::string ChowClass::to_cycle_string() const {
  return render(c_, [n = n_](std::size_t p) { return "[P^" + std::to_string(n - p) + "]"; });
}

ChowClass truncated_mul(const ChowClass& a, const ChowClass& b) {
  check_same(a, b);
  const std::size_t n = a.ambient_dim();
  ChowClass r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

ChowClass truncated_inverse(const ChowClass& a) {
  const std::size_t n = a.ambient_dim();
  if (a[0] != 1 && a[0] != -1)
    throw Error(ErrorKind::invalid_input,
                "class with constant term " + a[0].get_str() + " is not invertible");
  ChowClass b(n);
  b[0] = a[0];  // 1/(+-1) = +-1
  for (std::size_t p = 1; p <= n; ++p) {
    mpz_class s = 0;
    for (std::size_t j = 1; j <= p; ++j) s += a[j] * b[p - j];
    b[p] = -s * a[0];
  }
  return b;
}

ChowClass dual(const ChowClass& a) {
  ChowClass r = a;
  for (std::size_t p = 1; p <= a.ambient_dim(); p += 2) r[p] = -r[p];
  return r;
}

ChowClass tensor_by(const ChowClass& a, long k) {
  const std::size_t n = a.ambient_dim();
  ChowClass r(n);
  const mpz_class minus_k = -k;
  for (std::size_t p = 0; p <= n; ++p) {
    if (a[p] == 0) continue;
    if (p == 0) {
      r[0] += a[0];
      continue;
    }
    // (1 + kH)^{-p} = sum_j C(p+j-1, j) (-k)^j H^j
    mpz_class power = 1;
    for (std::size_t j = 0; p + j <= n; ++j) {
      r[p + j] += a[p] * binomial(p + j - 1, j) * power;
      power *= minus_k;
    }
  }
  return r;
}

ChowClass line_bundle_chern(std::size_t n, long k) {
  ChowClass r = ChowClass::one(n);
  if (n >= 1) r[1] = k;
  return r;
}

ChowClass chern_tangent(std::size_t n) {
  ChowClass r(n);
  for (std::size_t p = 0; p <= n; ++p) r[p] = binomial(n + 1, p);
  return r;
}

mpz_class integral(const ChowClass& a) { return a[a.ambient_dim()]; }

ChowClass pushforward_linear_embedding(const ChowClass& a, std::size_t n_from, std::size_t n_to) {
  if (a.ambient_dim() != n_from)
    throw Error(ErrorKind::dimension_mismatch, "class does not live on P^" + std::to_string(n_from));
  if (n_to < n_from)
    throw Error(ErrorKind::dimension_mismatch, "push-forward cannot decrease the dimension");
  const std::size_t shift = n_to - n_from;
  ChowClass r(n_to);
  for (std::size_t p = 0; p <= n_from; ++p) r[p + shift] = a[p];
  return r;
}

ChowClass ci_segre_oracle(const std::vector<long>& degrees, std::size_t n) {
  if (degrees.size() > n)
    throw Error(ErrorKind::invalid_input, "complete intersection of more than n hypersurfaces");
  ChowClass numerator = ChowClass::one(n);
  ChowClass denominator = ChowClass::one(n);
  for (long d : degrees) {
    if (d < 1) throw Error(ErrorKind::invalid_input, "hypersurface degree must be positive");
    numerator = numerator * ChowClass::hyperplane_power(n, 1, d);
    denominator = denominator * line_bundle_chern(n, d);
  }
  return numerator * truncated_inverse(denominator);
}

}  // namespace charclass
