#pragma once

// Lie structure of a crossed product R: the lower central series
// gamma_n(R), lower Lie powers R^[n] = gamma_n(R) R, upper Lie powers
// R^(n) = [R^(n-1), R] R, nil ideals and (n,m)-Engel checks.
//
// All subspaces are GF(p)-spans in the flattened coordinates of
// CrossedProduct; they are additive subgroups, which is what the ring
// definitions ask for.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/algebra.hpp"

namespace tga {

enum class SeriesKind { LowerGamma, LowerPower, UpperPower };
std::string to_string(SeriesKind kind);

struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerGamma;
  unsigned degree = 1;                  // [F : F_p]
  std::vector<std::size_t> prime_dims;  // GF(p)-dimension of term 1, 2, ...
  std::vector<Subspace> terms;
  bool terminated = false;  // a zero term was reached
  bool stabilized = false;  // the series became constant above zero
  std::optional<unsigned> index;  // smallest n with a zero n-th term

  /// n-th term (1-based); beyond the computed range the last term is
  /// returned when the series terminated or stabilized.
  const Subspace& term(unsigned n) const;
  /// Whether term(n) is determined by the computation.
  bool has_term(unsigned n) const;
};

/// max_steps = 0 selects dim + 2 terms.
SeriesReport gamma_series(const CrossedProduct& a, unsigned max_steps = 0);
SeriesReport lower_lie_powers(const CrossedProduct& a, unsigned max_steps = 0);
SeriesReport upper_lie_powers(const CrossedProduct& a, unsigned max_steps = 0);

Subspace whole_algebra(const CrossedProduct& a);
/// Span of [x, y] over spanning vectors of X and Y.
Subspace subspace_bracket(const CrossedProduct& a, const Subspace& x, const Subspace& y);
/// Span of x y over spanning vectors of X and Y.
Subspace subspace_product(const CrossedProduct& a, const Subspace& x, const Subspace& y);
/// Whether every product of spanning vectors of X and Y lies in Z.
bool product_contained(const CrossedProduct& a, const Subspace& x, const Subspace& y, const Subspace& z);

struct InclusionReport {
  bool holds = true;
  std::size_t checked = 0;  // number of containments tested
  std::string failure;      // first failing containment
};

/// R^[m] R^[n] in R^[n+m-2] (m, n >= 2), R^(n) R^(m) in R^(n+m-1)
/// (m, n >= 1), gamma_n in R^[n] and R^[n] in R^(n), over every pair of
/// determined terms.
InclusionReport check_power_inclusions(const CrossedProduct& a, const SeriesReport& gamma,
                                       const SeriesReport& lower, const SeriesReport& upper);

/// Nil test through the powers I, I^2, ...; throws DomainError when I is not
/// a two-sided ideal.
bool is_nil_ideal(const CrossedProduct& a, const Subspace& ideal);

struct StablyUntwistedResult {
  bool stably_untwisted = false;
  std::size_t codimension = 0;  // dim R - dim R^[2] over F
  StructureConstants quotient;  // R / R^[2] when proper
};

/// Stably untwisted iff R^[2] is a proper ideal.  Requires trivial sigma.
/// The quotient's structure constants are emitted and checked commutative.
StablyUntwistedResult stably_untwisted_test(const CrossedProduct& a);

enum class EngelStrategy { Exhaustive, Randomized };
std::string to_string(EngelStrategy s);

struct EngelOptions {
  unsigned n = 1;
  unsigned m = 1;
  EngelStrategy strategy = EngelStrategy::Exhaustive;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t pair_budget = 1ull << 24;  // exhaustive limit on |F|^{2 dim}
};

struct EngelReport {
  unsigned n = 1, m = 1;
  EngelStrategy strategy = EngelStrategy::Exhaustive;
  std::uint64_t seed = 0;
  bool holds = true;            // no counterexample among the checked b
  std::uint64_t b_checked = 0;  // every a is covered for each checked b
  std::optional<std::pair<AlgebraElement, AlgebraElement>> counterexample;  // (a, b)
  /// Largest nilpotency index of a -> [a, b^m] over the checked b, or
  /// nullopt when one of these maps is not nilpotent.
  std::optional<unsigned> minimal_n;
};

/// Exhaustive mode throws BudgetError when |F|^{2 dim} exceeds the budget.
EngelReport engel_check(const CrossedProduct& a, const EngelOptions& opts);

/// (n, m) -> (p^{l+t}, r) with m = p^l r, gcd(p, r) = 1 and p^t >= n minimal.
std::pair<std::uint64_t, std::uint64_t> engel_reduce(std::uint64_t n, std::uint64_t m, std::uint32_t p);

}  // namespace tga
