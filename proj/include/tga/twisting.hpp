#pragma once

// Twisting data (sigma, lambda) of a crossed product F^lambda_sigma[G].
//
// sigma(g) is stored as a Frobenius exponent e_g (alpha -> alpha^{p^{e_g}});
// lambda is a |G| x |G| table of units.  The cocycle identity checked by
// validate() is
//
//   lambda(a, bc) lambda(b, c) = lambda(ab, c) lambda(a, b)^{sigma(c)}
//
// together with e_a + e_b = e_{ab} (mod n).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tga/field.hpp"
#include "tga/group.hpp"

namespace tga {

using GroupPtr = std::shared_ptr<const Group>;

struct ValidationReport {
  enum class Kind { Ok, ZeroEntry, SigmaRange, SigmaHomomorphism, Cocycle };
  Kind kind = Kind::Ok;
  Index a = 0, b = 0, c = 0;  // offending pair/triple (unused coordinates zero)
  std::string message;

  bool ok() const { return kind == Kind::Ok; }
};

std::string to_string(ValidationReport::Kind kind);

class TwistingData {
 public:
  /// Twisted group algebra with trivial sigma and lambda == 1.
  TwistingData(GroupPtr group, FieldPtr field);
  TwistingData(GroupPtr group, FieldPtr field, std::vector<unsigned> sigma, std::vector<Elt> lambda);

  const GroupPtr& group_ptr() const { return group_; }
  const Group& group() const { return *group_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  std::size_t order() const { return group_->order(); }

  Elt lambda(Index g, Index h) const { return lambda_[static_cast<std::size_t>(g) * order() + h]; }
  unsigned sigma(Index g) const { return sigma_[g]; }
  const std::vector<Elt>& lambda_table() const { return lambda_; }
  const std::vector<unsigned>& sigma_table() const { return sigma_; }
  bool sigma_trivial() const;

  /// Any mutation clears the validated flag.
  void set_lambda(Index g, Index h, Elt v);

  /// Exhaustive check; sets the validated flag on success.
  const ValidationReport& validate();
  bool is_validated() const { return validated_; }
  /// Throws UsageError unless validate() has passed.
  void require_validated(const char* op) const;

  bool is_normalized() const;

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::vector<unsigned> sigma_;
  std::vector<Elt> lambda_;
  bool validated_ = false;
  ValidationReport report_;
};

/// Stateless exhaustive check of the cocycle axioms.
ValidationReport check_twisting(const TwistingData& t);

/// g~ -> g~ d_g.
struct DiagonalRescaling {
  std::vector<Elt> d;
};

/// Rescales by d_g = lambda(1,1)^{-1}; requires trivial sigma.
TwistingData normalize(const TwistingData& t);

/// lambda'(g,h) = lambda(g,h) d_g d_h d_{gh}^{-1}.  Requires trivial sigma.
TwistingData diagonal_rescale(const TwistingData& t, const DiagonalRescaling& d);

/// The coboundary (g,h) -> d_g d_h d_{gh}^{-1} as twisting data.
TwistingData coboundary(GroupPtr group, FieldPtr field, const DiagonalRescaling& d);

/// Rescaling that makes tau(h, g) = 1 for h in H, given lambda == 1 on H x H:
/// d_g = 1 on H and d_g = lambda(z, u) for g = z u, z in H, u the coset
/// representative of g.
DiagonalRescaling lemma5_rescaling(const TwistingData& t, const Subgroup& h);

/// Twist mu(h) = prod_{i=1}^{k-1} lambda(h^i, h), k = ord(h).
Elt twist(const TwistingData& t, Index h);
std::vector<Elt> twist_table(const TwistingData& t);

/// W = { w : lambda(g,w) = lambda(w,g) = 1 for all g }, closure re-verified.
Subgroup w_subgroup(const TwistingData& t);

struct InducedCocycle {
  Quotient quotient;
  TwistingData twisting;  // on quotient.group, validated
};

/// mu(g_i H, g_j H) = lambda(g_i, g_j).  Requires H normal, H inside W and
/// trivial sigma; every pair of representatives is checked for agreement.
InducedCocycle induced_cocycle(const TwistingData& t, const Subgroup& h);

/// Restriction of lambda to H x H as twisting data on induced_subgroup(G, H).
TwistingData restrict_to_subgroup(const TwistingData& t, const Subgroup& h);

/// Solves delta(d) = lambda, i.e. d_g d_h d_{gh}^{-1} = lambda(g,h) for all
/// g, h, via discrete logarithms and a diagonalized system over Z/(q-1).
/// Requires trivial sigma.
std::optional<DiagonalRescaling> coboundary_solve(const TwistingData& t);

/// Canonical key of the cohomology class of lambda (equal keys iff the
/// quotient of the two cocycles is a coboundary).
std::vector<std::uint64_t> cohomology_class_key(const TwistingData& t);

struct EnumerateOptions {
  std::size_t limit = 0;              // 0 = no limit on returned entries
  bool dedup = false;                 // one representative per cohomology class
  std::uint64_t budget = 1ull << 20;  // maximum number of cocycles scanned
};

struct CocycleEnumeration {
  std::vector<TwistingData> cocycles;  // normalized, validated
  bool complete = true;
  std::uint64_t scanned = 0;
  std::uint64_t total = 0;  // number of normalized cocycles (saturating)
};

/// All normalized cocycles with trivial sigma, in a fixed order.
CocycleEnumeration enumerate_cocycles(GroupPtr group, FieldPtr field, const EnumerateOptions& opts);

/// Lifts a cocycle over a prime field into GF(p^k) (prime-field elements
/// keep their encoding).
TwistingData lift_to_extension(const TwistingData& t, FieldPtr extension);

}  // namespace tga
