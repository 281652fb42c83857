#pragma once

// Finite fields GF(p^n) with q = p^n <= 2^16.
//
// Elements are encoded as integers in [0, q): the polynomial
// c_0 + c_1 x + ... + c_{n-1} x^{n-1} is stored as sum c_i p^i.  All
// arithmetic goes through precomputed log/exp tables built from a fixed
// generator of the multiplicative group.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tga {

using Elt = std::uint32_t;

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^n).  Without an explicit modulus the lexicographically
  /// smallest monic irreducible of degree n is used, where polynomials are
  /// ordered by the integer sum c_i p^i of their lower coefficients.
  /// Throws ValidationError for a non-prime p, a reducible or malformed
  /// modulus, or q > 2^16.
  static std::shared_ptr<const Field> make(
      std::uint32_t p, unsigned n,
      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, constant term first (length n + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elt generator() const { return generator_; }

  bool contains(Elt a) const { return a < q_; }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DomainError for a == 0.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  /// a^e for any integer e; negative exponents require a != 0.
  Elt pow(Elt a, std::int64_t e) const;

  /// x -> x^{p^e}.  Requires 0 <= e < n.
  Elt frobenius(Elt a, unsigned e) const;

  /// Index of a with respect to generator(); throws DomainError for 0.
  std::uint32_t discrete_log(Elt a) const;
  /// generator()^k for any k (reduced mod q - 1).
  Elt exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Smallest-discrete-log solution of y^k = c, or nullopt.
  /// Throws DomainError when c == 0, UsageError when k < 1.
  std::optional<Elt> kth_root(Elt c, std::uint64_t k) const;

  std::uint32_t multiplicative_order(Elt a) const;

  /// Coordinates in the polynomial basis (length n, constant first).
  std::vector<std::uint32_t> coords(Elt a) const;
  /// Inverse of coords(); throws ValidationError for out-of-range digits.
  Elt from_coords(std::span<const std::uint32_t> c) const;
  /// i-th polynomial basis element x^i.
  Elt basis_element(unsigned i) const;
  /// Digit i of a (coefficient of x^i).
  std::uint32_t digit(Elt a, unsigned i) const;

  std::string to_string(Elt a) const;

  bool same_spec(const Field& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i <= n
  Elt generator_ = 0;
  std::vector<std::uint32_t> log_;    // log_[0] unused
  std::vector<Elt> exp_;              // length 2(q - 1)
  std::vector<std::uint16_t> add_;    // q x q table when q is small
};

using FieldPtr = std::shared_ptr<const Field>;

bool operator==(const Field& a, const Field& b);

/// Field element bound to its field; arithmetic across different field
/// specifications throws UsageError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elt value);

  const FieldPtr& field() const { return field_; }
  Elt value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coords(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement frobenius(unsigned e) const;

  bool operator==(const FieldElement& o) const;

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Elt value_;
};

bool is_prime(std::uint64_t n);

}  // namespace tga
