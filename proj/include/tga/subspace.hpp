#pragma once

// Subspaces of GF(p)^D in reduced row echelon form, and small dense
// matrices over GF(p).  Row operations go through tga::kernels.

#include <cstdint>
#include <span>
#include <vector>

#include "tga/kernels.hpp"

namespace tga {

using kernels::Lane;
using PrimeVector = std::vector<Lane>;

/// Inverses modulo a prime p < 2^16.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  Lane inv(Lane a) const;
  Lane neg(Lane a) const { return a == 0 ? 0 : static_cast<Lane>(p_ - a); }

 private:
  std::uint32_t p_;
  std::vector<Lane> inv_;
};

class Subspace {
 public:
  Subspace(std::size_t ambient_dim, std::uint32_t p);

  std::size_t ambient_dim() const { return ambient_; }
  std::uint32_t characteristic() const { return mod_.p(); }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(std::span<const Lane> v);
  bool contains(std::span<const Lane> v) const;
  /// v minus its projection onto the pivot columns (zero iff v is in the span).
  PrimeVector residual(std::span<const Lane> v) const;
  bool contains(const Subspace& other) const;

  /// Reduced echelon rows ordered by pivot column.
  const std::vector<PrimeVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  void reduce_in_place(PrimeVector& v) const;

  std::size_t ambient_;
  PrimeModulus mod_;
  std::vector<PrimeVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Square matrix over GF(p); row-vector convention x -> x M.
class PrimeMatrix {
 public:
  PrimeMatrix(std::size_t n, std::uint32_t p);

  std::size_t size() const { return n_; }
  std::uint32_t characteristic() const { return p_; }
  std::span<Lane> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const Lane> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  bool is_zero() const;

  /// this * other.
  PrimeMatrix multiply(const PrimeMatrix& other) const;
  /// x M for a row vector x.
  PrimeVector apply(std::span<const Lane> x) const;

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Lane> data_;
};

}  // namespace tga
