#pragma once

// Finite groups stored as full Cayley tables.  Index 0 is always the
// identity.  Subgroups are sorted member lists.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tga {

using Index = std::uint32_t;

class Group {
 public:
  /// Validates the table: square, entries in range, identity at index 0,
  /// Latin square, associative.  Throws ValidationError naming the first
  /// offending row/column or triple.
  static Group from_table(std::vector<std::vector<Index>> table, std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inverses_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Index a) const;
  std::vector<std::vector<Index>> table() const;

  bool operator==(const Group& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverses_;
  std::vector<std::string> labels_;
};

struct Subgroup {
  std::vector<Index> members;  // sorted, contains 0

  std::size_t size() const { return members.size(); }
  bool contains(Index g) const;
  bool operator==(const Subgroup&) const = default;
};

// Families.  Element orderings:
//   cyclic(k):      g^i at index i
//   dihedral(2k):   r^i at i, r^i s at k + i, with s r s = r^{-1}
//   quaternion8:    1, -1, i, -i, j, -j, k, -k
//   klein_four:     1, a, b, ab
//   symmetric(k):   permutations in lexicographic order, (xy)(t) = x(y(t))
//   direct_product: (g1, g2) at g1 * |G2| + g2
Group cyclic(unsigned k);
Group dihedral(unsigned order);
Group quaternion8();
Group klein_four();
Group symmetric(unsigned k);
Group direct_product(const Group& a, const Group& b);

std::uint64_t element_order(const Group& g, Index a);
/// (a, b) = a^{-1} b^{-1} a b.
Index group_commutator(const Group& g, Index a, Index b);
Index power(const Group& g, Index a, std::uint64_t e);

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
/// Breadth-first closure of a generating set.
Subgroup generate_subgroup(const Group& g, const std::vector<Index>& gens);
/// Checks closure and membership of the identity.
bool is_subgroup(const Group& g, const std::vector<Index>& members);
bool is_normal(const Group& g, const Subgroup& h);
/// A pair (g, h) with g^{-1} h g outside H, or nullopt when H is normal.
std::optional<std::pair<Index, Index>> normality_violation(const Group& g, const Subgroup& h);

/// Subgroup generated by all commutators (x, y), x in A, y in B.
Subgroup mutual_commutator(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup commutator_subgroup(const Group& g);
Subgroup center(const Group& g);
bool is_abelian(const Group& g);
std::size_t conjugacy_class_count(const Group& g);
std::uint64_t exponent(const Group& g);

/// gamma_1 = G, gamma_{i+1} = (gamma_i, G) until it stabilizes.
std::vector<Subgroup> lower_central_series(const Group& g);
/// Class c with gamma_{c+1} = 1, or nullopt for non-nilpotent groups.
/// The trivial group has class 0.
std::optional<unsigned> nilpotency_class(const Group& g);

struct Quotient {
  Group group;
  std::vector<Index> transversal;  // smallest member per coset, identity coset first
  std::vector<Index> coset_of;     // element -> coset index
};

/// Throws DomainError naming a violating conjugation when H is not normal.
Quotient quotient_group(const Group& g, const Subgroup& h);

/// H as a group in its own right; element i of the result is h.members[i].
Group induced_subgroup(const Group& g, const Subgroup& h);

bool is_p_element(const Group& g, Index a, std::uint32_t p);
/// True when n is a power of p (1 = p^0 included).
bool is_power_of(std::uint64_t n, std::uint64_t p);
/// Element of prime-power order q^k for some prime q (identity included).
std::optional<std::uint32_t> prime_of_prime_power(std::uint64_t n);

/// Every subgroup, sorted by (size, members).
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> normal_subgroups(const Group& g);

/// Brute-force isomorphism test for small groups (order <= 10).
bool are_isomorphic(const Group& a, const Group& b);

}  // namespace tga
