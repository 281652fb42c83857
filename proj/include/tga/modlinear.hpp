#pragma once

// Linear systems over the ring Z/M.
//
// A matrix A is brought to diagonal form D = U A V (mod M) with U, V
// invertible over Z/M, using extended-gcd row and column operations on
// residues.  The factorization solves A x = b, enumerates the kernel and
// produces canonical keys for cosets of the image.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tga {

class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return m_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  /// Adds v (possibly negative) to entry (r, c).
  void add(std::size_t r, std::size_t c, std::int64_t v);

  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> x) const;

 private:
  friend class ModDiagonalization;
  std::size_t rows_, cols_;
  std::uint64_t m_;
  std::vector<std::uint64_t> data_;
};

class ModDiagonalization {
 public:
  /// Without left tracking only the kernel queries are available.
  explicit ModDiagonalization(ModMatrix a, bool track_left = true);

  std::uint64_t modulus() const { return m_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::uint64_t>& diagonal() const { return diag_; }

  /// Some x with A x = b (mod M), or nullopt.
  std::optional<std::vector<std::uint64_t>> solve(std::span<const std::uint64_t> b) const;

  /// Canonical representative of b modulo the image of A: equal keys iff
  /// the difference lies in the image.
  std::vector<std::uint64_t> coset_key(std::span<const std::uint64_t> b) const;

  /// Number of solutions of A x = 0, saturating at UINT64_MAX.
  std::uint64_t kernel_size() const;

  /// Calls visit(x) for kernel elements in a fixed mixed-radix order until
  /// visit returns false or max_count elements were produced.  Returns the
  /// number visited.
  std::uint64_t enumerate_kernel(const std::function<bool(const std::vector<std::uint64_t>&)>& visit,
                                 std::uint64_t max_count) const;

 private:
  std::size_t rows_, cols_;
  std::uint64_t m_;
  bool track_left_;
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> diag_;  // length rank_
  std::vector<std::uint64_t> u_;     // rows_ x rows_
  std::vector<std::uint64_t> v_;     // cols_ x cols_
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace tga
