#include "tga/subspace.hpp"

#include <algorithm>

#include "tga/error.hpp"

namespace tga {

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p), inv_(p, 0) {
  if (p < 2 || p > 65535) throw UsageError("prime modulus out of range");
  for (std::uint32_t a = 1; a < p; ++a) {
    // Fermat inverse a^{p-2}.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    inv_[a] = static_cast<Lane>(r);
  }
}

Lane PrimeModulus::inv(Lane a) const {
  if (a == 0 || a >= p_) throw DomainError("no inverse modulo p");
  return inv_[a];
}

Subspace::Subspace(std::size_t ambient_dim, std::uint32_t p) : ambient_(ambient_dim), mod_(p) {}

void Subspace::reduce_in_place(PrimeVector& v) const {
  const auto& k = kernels::dispatch();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Lane c = v[pivots_[i]];
    if (c != 0) k.axpy(v, rows_[i], mod_.neg(c), mod_.p());
  }
}

PrimeVector Subspace::residual(std::span<const Lane> v) const {
  if (v.size() != ambient_) throw UsageError("vector dimension mismatch");
  PrimeVector r(v.begin(), v.end());
  reduce_in_place(r);
  return r;
}

bool Subspace::contains(std::span<const Lane> v) const {
  return kernels::dispatch().is_zero(residual(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::insert(std::span<const Lane> v) {
  if (rows_.size() == ambient_) return false;
  PrimeVector r = residual(v);
  const auto& k = kernels::dispatch();
  std::size_t lead = 0;
  while (lead < ambient_ && r[lead] == 0) ++lead;
  if (lead == ambient_) return false;
  k.scale(r, mod_.inv(r[lead]), mod_.p());
  for (auto& row : rows_) {
    const Lane c = row[lead];
    if (c != 0) k.axpy(row, r, mod_.neg(c), mod_.p());
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

PrimeMatrix::PrimeMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), data_(n * n, 0) {}

bool PrimeMatrix::is_zero() const { return kernels::dispatch().is_zero(data_); }

PrimeMatrix PrimeMatrix::multiply(const PrimeMatrix& other) const {
  if (other.n_ != n_) throw UsageError("matrix size mismatch");
  const auto& k = kernels::dispatch();
  PrimeMatrix out(n_, p_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto dst = out.row(i);
    const auto src = row(i);
    for (std::size_t j = 0; j < n_; ++j)
      if (src[j] != 0) k.axpy(dst, other.row(j), src[j], p_);
  }
  return out;
}

PrimeVector PrimeMatrix::apply(std::span<const Lane> x) const {
  if (x.size() != n_) throw UsageError("vector dimension mismatch");
  const auto& k = kernels::dispatch();
  PrimeVector out(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    if (x[j] != 0) k.axpy(out, row(j), x[j], p_);
  return out;
}

}  // namespace tga
