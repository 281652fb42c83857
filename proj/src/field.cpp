#include "tga/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tga/error.hpp"

namespace tga {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo a monic divisor.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

// Monic f of degree n is irreducible: no roots, and for n >= 4 no monic
// divisor of degree 2..n/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (has_root(f, p)) return false;
  for (std::size_t d = 2; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t p, unsigned n,
                                         std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ValidationError("field order exceeds 2^16");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->n_ = n;
  f->q_ = static_cast<std::uint32_t>(q);
  f->pow_p_.resize(n + 1);
  f->pow_p_[0] = 1;
  for (unsigned i = 1; i <= n; ++i) f->pow_p_[i] = f->pow_p_[i - 1] * p;

  if (modulus) {
    Poly m = *modulus;
    if (m.size() != n + 1) throw ValidationError("modulus must have n + 1 coefficients");
    for (auto c : m)
      if (c >= p) throw ValidationError("modulus coefficient out of range [0, p)");
    if (m.back() != 1) throw ValidationError("modulus must be monic");
    if (!is_irreducible(m, p)) throw ValidationError("modulus is reducible over GF(p)");
    f->modulus_ = std::move(m);
  } else {
    const std::uint64_t count = q;  // p^n candidates for the lower coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly m(n + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[n] = 1;
      if (is_irreducible(m, p)) {
        f->modulus_ = std::move(m);
        break;
      }
    }
    if (f->modulus_.empty()) throw InternalError("no irreducible polynomial found");
  }

  // Slow multiplication on digit vectors; only used while building tables.
  auto to_poly = [&](Elt a) {
    Poly r(n);
    for (unsigned i = 0; i < n; ++i) {
      r[i] = a % p;
      a /= p;
    }
    return r;
  };
  auto from_poly = [&](const Poly& r) {
    Elt a = 0;
    for (std::size_t i = r.size(); i-- > 0;) a = a * p + r[i];
    return a;
  };
  auto slow_mul = [&](Elt a, Elt b) {
    Poly x = to_poly(a), y = to_poly(b);
    Poly z(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        z[i + j] = static_cast<std::uint32_t>((z[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    z = poly_rem(z, f->modulus_, p);
    z.resize(n, 0);
    return from_poly(z);
  };
  auto slow_pow = [&](Elt a, std::uint64_t e) {
    Elt r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t group_order = q - 1;
  const auto factors = prime_factors(group_order);
  Elt gen = 0;
  for (Elt cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, group_order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw InternalError("no multiplicative generator found");
  f->generator_ = gen;

  f->log_.assign(q, 0);
  f->exp_.assign(2 * group_order, 0);
  Elt cur = 1;
  for (std::uint64_t k = 0; k < group_order; ++k) {
    f->exp_[k] = cur;
    f->exp_[k + group_order] = cur;
    f->log_[cur] = static_cast<std::uint32_t>(k);
    cur = slow_mul(cur, gen);
  }
  if (cur != 1) throw InternalError("generator order mismatch");

  if (n > 1 && p != 2 && q <= 1024) {
    f->add_.assign(static_cast<std::size_t>(q) * q, 0);
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b) {
        Elt r = 0;
        for (unsigned i = n; i-- > 0;) r = r * p + ((a / f->pow_p_[i]) % p + (b / f->pow_p_[i]) % p) % p;
        f->add_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(r);
      }
  }
  return f;
}

Elt Field::add(Elt a, Elt b) const {
  if (n_ == 1) {
    const Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
  Elt r = 0;
  for (unsigned i = n_; i-- > 0;) r = r * p_ + ((a / pow_p_[i]) % p_ + (b / pow_p_[i]) % p_) % p_;
  return r;
}

Elt Field::neg(Elt a) const {
  if (p_ == 2) return a;
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  Elt r = 0;
  for (unsigned i = n_; i-- > 0;) {
    const std::uint32_t d = (a / pow_p_[i]) % p_;
    r = r * p_ + (d == 0 ? 0 : p_ - d);
  }
  return r;
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::inv(Elt a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt Field::pow(Elt a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t m = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
  if (k < 0) k += m;
  return exp_[k];
}

Elt Field::frobenius(Elt a, unsigned e) const {
  if (e >= n_) throw UsageError("frobenius exponent must lie in [0, n)");
  if (e == 0 || a == 0) return a;
  const std::uint64_t m = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * pow_p_[e]) % m];
}

std::uint32_t Field::discrete_log(Elt a) const {
  if (a == 0) throw DomainError("discrete logarithm of zero");
  if (a >= q_) throw UsageError("element out of range");
  return log_[a];
}

std::optional<Elt> Field::kth_root(Elt c, std::uint64_t k) const {
  if (c == 0) throw DomainError("kth_root of zero");
  if (k < 1) throw UsageError("kth_root requires k >= 1");
  const std::uint64_t m = q_ - 1;
  const std::uint64_t l = log_[c];
  const std::uint64_t g = std::gcd(k % m == 0 ? m : k % m, m);
  if (m == 1) return Elt{1};
  if (l % g != 0) return std::nullopt;
  // k x = l (mod m) has solutions x0 + t (m / g); x0 is the smallest one.
  const std::uint64_t mg = m / g;
  const std::uint64_t kk = (k / g) % mg;
  const std::uint64_t x0 = mg == 1 ? 0 : (l / g) % mg * inv_mod(static_cast<std::uint32_t>(kk), static_cast<std::uint32_t>(mg)) % mg;
  return exp_[x0];
}

std::uint32_t Field::multiplicative_order(Elt a) const {
  if (a == 0) throw DomainError("zero has no multiplicative order");
  const std::uint32_t m = q_ - 1;
  return m / std::gcd(m, log_[a] == 0 ? m : log_[a]);
}

std::vector<std::uint32_t> Field::coords(Elt a) const {
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    r[i] = a % p_;
    a /= p_;
  }
  return r;
}

Elt Field::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != n_) throw ValidationError("field element needs exactly n coefficients");
  Elt a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw ValidationError("field coefficient out of range [0, p)");
    a = a * p_ + c[i];
  }
  return a;
}

Elt Field::basis_element(unsigned i) const {
  if (i >= n_) throw UsageError("basis index out of range");
  return pow_p_[i];
}

std::uint32_t Field::digit(Elt a, unsigned i) const { return (a / pow_p_[i]) % p_; }

std::string Field::to_string(Elt a) const {
  if (n_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool operator==(const Field& a, const Field& b) { return a.same_spec(b); }

FieldElement::FieldElement(FieldPtr field, Elt value) : field_(std::move(field)), value_(value) {
  if (!field_) throw UsageError("field element without a field");
  if (!field_->contains(value_)) throw UsageError("field element out of range");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_spec(*o.field_))
    throw UsageError("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::frobenius(unsigned e) const { return {field_, field_->frobenius(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && (field_ == o.field_ || field_->same_spec(*o.field_));
}

}  // namespace tga
