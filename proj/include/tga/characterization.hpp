#pragma once

// Structural predicates for Lie nilpotent and Engel twisted group algebras,
// and the harness that compares them with brute-force Lie computations.
//
// Predicates work on a normalized copy of the twisting data.  A crossed
// product with nontrivial sigma is reported as failing every predicate: a
// Lie nilpotent or Engel crossed product is necessarily a twisted group
// algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/algebra.hpp"
#include "tga/lie.hpp"

namespace tga {

struct UntwistedWitness {
  Index element = 0;
  Elt gamma = 1;
  std::uint64_t order = 1;
};

/// gamma with ord(g~ gamma) = ord(g).  Requires trivial sigma; throws
/// DomainError when g is not a p-element for p = char F.
std::optional<UntwistedWitness> untwisted_p_element(const CrossedProduct& a, Index g);

struct ClosureReport {
  bool holds = true;
  std::vector<Index> elements;  // untwisted p-elements
  std::vector<UntwistedWitness> witnesses;
  std::vector<Index> p_elements_without_witness;
  std::optional<std::pair<Index, Index>> failing;  // product or inverse leaving the set
};

ClosureReport untwisted_closure_check(const CrossedProduct& a);

struct CommutatorConditionReport {
  bool holds = true;
  std::optional<std::pair<Index, Index>> failing;
  std::string reason;
  /// Pairs where the printed closed expressions disagree with the
  /// operational chi (counted, never asserted).
  std::size_t printed_lemma_mismatches = 0;
  std::size_t printed_condition_mismatches = 0;
};

/// mu((a,b)) chi((a,b))^{p^m} = 1 for every pair, with p^m = ord((a,b)).
/// A commutator whose order is not a power of p fails the check.
CommutatorConditionReport commutator_condition_check(const CrossedProduct& a);

struct CentralPowerReport {
  bool holds = true;
  std::string reason;
};

/// b^{p^t} central for all b; p-elements commute with q-elements (q != p a
/// prime, nontrivial q-power order) and lambda(a,c) = lambda(c,a).
CentralPowerReport central_power_check(const CrossedProduct& a, unsigned t);

struct Clause {
  std::string name;
  bool value;
};

struct PredicateResult {
  bool value = false;
  std::vector<Clause> clauses;
  std::optional<Subgroup> witness_b;  // normal subgroup B, where one is searched
  std::string summary() const;
};

PredicateResult corollary1_predicate(const CrossedProduct& a);
PredicateResult theorem1_predicate(const CrossedProduct& a);
/// n does not enter the checked conditions (the index bound is not computed).
PredicateResult theorem2_predicate(const CrossedProduct& a, unsigned n, unsigned m);
PredicateResult corollary2_predicate(const CrossedProduct& a);

struct LemmaTwoReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string failure;
};

/// For every g and gamma with g~ gamma of p-power order: that order is
/// ord(g) and mu(g) gamma^{ord(g)} = 1.
LemmaTwoReport lemma2_order_check(const CrossedProduct& a);
/// For untwisted p-elements a, b with witnesses: ab is a p-element of order
/// p^l and mu(ab) = (gamma_1 gamma_2 lambda(a,b))^{-p^l}.
LemmaTwoReport lemma2_product_twist_check(const CrossedProduct& a);

/// Smallest t with p^t >= index.
unsigned ceil_log(std::uint64_t index, std::uint32_t p);

struct CorpusInstance {
  std::string id;
  TwistingData twisting;
  unsigned engel_n = 0;  // 0 selects dim + 1
  unsigned engel_m = 1;
};

struct OracleOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t pair_budget = 1ull << 24;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct EngelSummary {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t b_checked = 0;
  bool engel = false;                 // every ad_b nilpotent among the checked b
  std::optional<unsigned> minimal_n;  // over the checked b
  bool holds_at_budget = false;       // (dim + 1, 1)-Engel among the checked b
  bool nm_holds = false;              // (engel_n, engel_m)-Engel among the checked b
  std::optional<std::pair<AlgebraElement, AlgebraElement>> counterexample;
};

struct InstanceVerdict {
  std::string id;
  std::size_t group_order = 0;
  std::uint32_t p = 0;
  unsigned degree = 1;
  bool sigma_trivial = true;
  std::vector<std::size_t> gamma_dims, lower_dims, upper_dims;  // GF(p)-dimensions
  std::optional<unsigned> gamma_index, lower_index, upper_index;
  PredicateResult corollary1, theorem1, theorem2, corollary2;
  unsigned engel_n = 1, engel_m = 1;
  EngelSummary engel;
  std::vector<std::pair<std::string, bool>> agreement;
  std::vector<std::string> notes;
  bool all_agree = true;
  double elapsed_ms = 0;
};

InstanceVerdict oracle_verdict(const CorpusInstance& inst, const OracleOptions& opts);
/// Runs instances across worker threads; output order follows the input.
std::vector<InstanceVerdict> oracle_compare(const std::vector<CorpusInstance>& corpus, const OracleOptions& opts);

}  // namespace tga
