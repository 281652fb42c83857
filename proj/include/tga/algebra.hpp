#pragma once

// The crossed product F^lambda_sigma[G] with basis {g~ : g in G}.
//
// Elements are written g~ alpha (basis symbol left, coefficient right) and
// multiply by
//
//   g~ alpha . h~ beta = (gh)~ lambda(g,h) alpha^{sigma(h)} beta.
//
// For subspace work an element is flattened to GF(p)^{N n}: coordinate
// g n + i is digit i of the coefficient of g~.

#include <optional>
#include <string>
#include <vector>

#include "tga/subspace.hpp"
#include "tga/twisting.hpp"

namespace tga {

struct AlgebraElement {
  std::vector<Elt> coeffs;  // coefficient of g~ at index g

  bool is_zero() const;
  std::vector<Index> support() const;
  bool operator==(const AlgebraElement&) const = default;
};

struct BasisTriple {
  Index a, b, c;
};

/// First basis triple on which (x y) z != x (y z), trying the scalar 1 and a
/// generator of F in each slot.  nullopt when associativity holds.
std::optional<BasisTriple> associativity_violation(const TwistingData& t);

/// Structure constants c[(i dim + j) dim + k]: b_i b_j = sum_k b_k c_ijk.
struct StructureConstants {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Elt> c;
  std::vector<Index> basis_labels;  // group index behind each basis vector

  Elt at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  bool is_commutative() const;
  bool operator==(const StructureConstants& o) const {
    return field->same_spec(*o.field) && dim == o.dim && c == o.c;
  }
};

class CrossedProduct {
 public:
  /// Checks associativity on basis triples and then the full axioms.
  /// Throws ValidationError naming the offending triple.
  explicit CrossedProduct(TwistingData t);

  const TwistingData& twisting() const { return t_; }
  const Group& group() const { return t_.group(); }
  const Field& field() const { return t_.field(); }
  std::size_t order() const { return t_.order(); }
  /// Dimension over GF(p).
  std::size_t prime_dim() const { return t_.order() * t_.field().degree(); }

  AlgebraElement zero() const;
  AlgebraElement identity() const;
  AlgebraElement basis(Index g, Elt alpha = 1) const;
  /// g~ x^i, the i-th prime-field basis vector over g.
  AlgebraElement prime_basis(std::size_t index) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement neg(const AlgebraElement& x) const;
  /// x alpha (scalar on the right).
  AlgebraElement scale(const AlgebraElement& x, Elt alpha) const;
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement power(const AlgebraElement& x, std::uint64_t k) const;

  /// Two-sided inverse of g~; verified against mul.
  AlgebraElement basis_inverse(Index g) const;

  bool is_commutative() const;

  /// Smallest k <= dim with x^k = 0, or nullopt.
  std::optional<unsigned> nilpotency_index(const AlgebraElement& x) const;

  PrimeVector flatten(const AlgebraElement& x) const;
  AlgebraElement unflatten(std::span<const Lane> v) const;

  /// Structure constants on the basis {g~}.
  StructureConstants structure_constants() const;

 private:
  TwistingData t_;
};

/// (g~, h~) = g~^{-1} h~^{-1} g~ h~ = (g,h)~ chi.
struct UnitCommutator {
  Index element;
  Elt chi;
};

/// Throws InternalError if the commutator is not supported on (g,h).
UnitCommutator unit_commutator(const CrossedProduct& a, Index g, Index h);

/// Closed form for chi with normalized lambda and trivial sigma:
/// lambda(g^-1,g)^-1 lambda(h^-1,h)^-1 lambda(g^-1,h^-1) lambda(g,h)
/// lambda(g^-1 h^-1, gh).
Elt chi_closed_form(const TwistingData& t, Index g, Index h);

/// The expression lambda(b,a)^-1 lambda(a, a^-1 b a) lambda(b,(b,a))
/// lambda((b,a),(a,b))^-1 as printed for chi.
Elt chi_printed_lemma_form(const TwistingData& t, Index a, Index b);

/// The base of the displayed commutator condition,
/// lambda(a,b)^-1 lambda(b, b^-1 a b) lambda(a,(a,b)) lambda((b,a),(a,b))^-1.
Elt chi_printed_condition_base(const TwistingData& t, Index a, Index b);

/// Smallest two-sided ideal containing the generators, as a GF(p)-subspace.
Subspace ideal_span(const CrossedProduct& a, const std::vector<AlgebraElement>& generators);

/// I(H), spanned by u_i~ (h~ - 1~) for transversal u_i and h in H \ {1}.
/// Requires H normal, H inside W, trivial sigma and normalized lambda.
Subspace augmentation_ideal(const CrossedProduct& a, const Subgroup& h);

/// Whether the subspace is closed under left and right multiplication.
bool is_two_sided_ideal(const CrossedProduct& a, const Subspace& s);

/// Structure constants of A / I on the greedy complement basis {g~}
/// (smallest group indices first).  Requires trivial sigma; throws
/// DomainError when I is not a two-sided ideal.
StructureConstants quotient_algebra(const CrossedProduct& a, const Subspace& ideal);

/// Corrected bracket identity [x~, y~] = y~ x~ ((x~, y~) - 1~).
bool bracket_identity_holds(const CrossedProduct& a, Index x, Index y);
/// The variant [x~, y~] = x~^-1 y~^-1 ((x~, y~) - 1~).
bool printed_bracket_identity_holds(const CrossedProduct& a, Index x, Index y);

/// ([a,b] r)^2 against r[ab,b,a]r + [ab,b,a]r + [a,b,a]br + [ab,b,r][ab,b]r.
bool square_expansion_holds(const CrossedProduct& alg, const AlgebraElement& a, const AlgebraElement& b,
                            const AlgebraElement& r);

}  // namespace tga
