#include "tga/characterization.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "tga/error.hpp"

namespace tga {

namespace {

CrossedProduct normalized(const CrossedProduct& a) {
  if (!a.twisting().sigma_trivial() || a.twisting().is_normalized()) return a;
  return CrossedProduct(normalize(a.twisting()));
}

std::string pair_label(const Group& g, Index a, Index b) { return "(" + g.label(a) + ", " + g.label(b) + ")"; }

bool is_p_power_order_subgroup(const Subgroup& s, std::uint32_t p) { return is_power_of(s.size(), p); }

}  // namespace

unsigned ceil_log(std::uint64_t index, std::uint32_t p) {
  unsigned t = 0;
  std::uint64_t pt = 1;
  while (pt < index) {
    pt *= p;
    ++t;
  }
  return t;
}

std::optional<UntwistedWitness> untwisted_p_element(const CrossedProduct& a, Index g) {
  const TwistingData& t = a.twisting();
  if (!t.sigma_trivial()) throw DomainError("untwisted p-elements require trivial sigma");
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  if (!is_p_element(a.group(), g, p)) throw DomainError(a.group().label(g) + " is not a p-element");
  const std::uint64_t k = element_order(a.group(), g);
  const auto gk = a.power(a.basis(g), k);
  const auto supp = gk.support();
  if (supp.size() != 1 || supp[0] != 0) throw InternalError("power of a basis unit left the identity line");
  // (g~ gamma)^k = 1~ c gamma^k must equal 1~ lambda(1,1)^-1.
  const Elt rhs = f.inv(f.mul(gk.coeffs[0], t.lambda(0, 0)));
  const auto gamma = f.kth_root(rhs, k);
  if (!gamma) return std::nullopt;
  const auto x = a.basis(g, *gamma);
  const auto one = a.identity();
  if (a.power(x, k) != one) throw InternalError("untwisting witness failed replay");
  for (std::uint64_t j = 1; j < k; ++j)
    if (k % j == 0 && a.power(x, j) == one) throw InternalError("untwisting witness has a smaller order");
  return UntwistedWitness{g, *gamma, k};
}

ClosureReport untwisted_closure_check(const CrossedProduct& a) {
  ClosureReport r;
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  std::vector<char> member(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) {
    if (!is_p_element(g, x, p)) continue;
    if (auto w = untwisted_p_element(a, x)) {
      r.elements.push_back(x);
      r.witnesses.push_back(*w);
      member[x] = 1;
    } else {
      r.p_elements_without_witness.push_back(x);
    }
  }
  for (Index x : r.elements) {
    if (!member[g.inv(x)]) {
      r.holds = false;
      r.failing = std::make_pair(x, x);
      return r;
    }
    for (Index y : r.elements)
      if (!member[g.mul(x, y)]) {
        r.holds = false;
        r.failing = std::make_pair(x, y);
        return r;
      }
  }
  return r;
}

CommutatorConditionReport commutator_condition_check(const CrossedProduct& alg) {
  if (!alg.twisting().sigma_trivial()) throw DomainError("the commutator condition requires trivial sigma");
  const CrossedProduct a = normalized(alg);
  const TwistingData& t = a.twisting();
  const Group& g = a.group();
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  CommutatorConditionReport r;
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y) {
      const auto uc = unit_commutator(a, x, y);
      if (uc.chi != chi_closed_form(t, x, y)) throw InternalError("chi disagrees with its closed form");
      if (chi_printed_lemma_form(t, x, y) != uc.chi) ++r.printed_lemma_mismatches;
      const std::uint64_t k = element_order(g, uc.element);
      if (!is_power_of(k, p)) {
        if (r.holds) {
          r.holds = false;
          r.failing = std::make_pair(x, y);
          r.reason = "commutator of " + pair_label(g, x, y) + " has order " + std::to_string(k) +
                     ", not a power of " + std::to_string(p);
        }
        continue;
      }
      const Elt mu = twist(t, uc.element);
      const bool ok = f.mul(mu, f.pow(uc.chi, static_cast<std::int64_t>(k))) == 1;
      const bool printed = f.pow(chi_printed_condition_base(t, x, y), -static_cast<std::int64_t>(k)) == mu;
      if (printed != ok) ++r.printed_condition_mismatches;
      if (!ok && r.holds) {
        r.holds = false;
        r.failing = std::make_pair(x, y);
        r.reason = "mu((a,b)) chi^{p^m} != 1 at " + pair_label(g, x, y);
      }
    }
  return r;
}

CentralPowerReport central_power_check(const CrossedProduct& alg, unsigned t) {
  const CrossedProduct a = normalized(alg);
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  CentralPowerReport r;
  std::uint64_t pt = 1;
  for (unsigned i = 0; i < t; ++i) pt *= p;
  const Subgroup z = center(g);
  for (Index b = 0; b < g.order(); ++b) {
    const Index c = power(g, b, pt);
    if (!z.contains(c)) {
      r.holds = false;
      r.reason = g.label(b) + "^" + std::to_string(pt) + " is not central";
      return r;
    }
  }
  for (Index x = 0; x < g.order(); ++x) {
    if (!is_p_element(g, x, p)) continue;
    for (Index c = 1; c < g.order(); ++c) {
      const auto q = prime_of_prime_power(element_order(g, c));
      if (!q || *q == p) continue;
      if (g.mul(x, c) != g.mul(c, x)) {
        r.holds = false;
        r.reason = "p-element " + g.label(x) + " does not commute with q-element " + g.label(c);
        return r;
      }
      if (a.twisting().lambda(x, c) != a.twisting().lambda(c, x)) {
        r.holds = false;
        r.reason = "lambda is not symmetric at " + pair_label(g, x, c);
        return r;
      }
    }
  }
  return r;
}

std::string PredicateResult::summary() const {
  std::string s = value ? "true" : "false";
  for (const auto& c : clauses) s += "; " + c.name + "=" + (c.value ? "yes" : "no");
  return s;
}

namespace {

struct BCheck {
  std::vector<Clause> clauses;
  bool ok() const {
    for (const auto& c : clauses)
      if (!c.value) return false;
    return true;
  }
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : clauses) n += c.value;
    return n;
  }
};

bool restriction_stably_untwisted(const CrossedProduct& a, const Subgroup& b) {
  return stably_untwisted_test(CrossedProduct(restrict_to_subgroup(a.twisting(), b))).stably_untwisted;
}

BCheck theorem2_b(const CrossedProduct& a, const Subgroup& b, unsigned m) {
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  BCheck r;
  const Group bg = induced_subgroup(g, b);
  r.clauses.push_back({"B' has p-power order", is_p_power_order_subgroup(commutator_subgroup(bg), p)});
  const Quotient q = quotient_group(g, b);
  std::vector<Index> sylow;
  for (Index x = 0; x < q.group.order(); ++x)
    if (is_p_element(q.group, x, p)) sylow.push_back(x);
  const bool sub = is_subgroup(q.group, sylow);
  const bool normal = sub && is_normal(q.group, Subgroup{sylow});
  r.clauses.push_back({"p-elements of G/B form a normal subgroup P/B", normal});
  if (!normal) return r;
  Subgroup pg;
  for (Index x = 0; x < g.order(); ++x)
    if (Subgroup{sylow}.contains(q.coset_of[x])) pg.members.push_back(x);
  const Quotient gp = quotient_group(g, pg);
  const bool ab = is_abelian(gp.group);
  r.clauses.push_back({"G/P abelian", ab});
  r.clauses.push_back({"exponent of G/P divides m", m % exponent(gp.group) == 0});
  r.clauses.push_back({"P nilpotent", nilpotency_class(induced_subgroup(g, pg)).has_value()});
  r.clauses.push_back({"F^lambda[B] stably untwisted", restriction_stably_untwisted(a, b)});
  return r;
}

BCheck corollary2_b(const CrossedProduct& a, const Subgroup& b) {
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  BCheck r;
  r.clauses.push_back({"|G:B| is a power of p", is_power_of(g.order() / b.size(), p)});
  r.clauses.push_back(
      {"B' is a p-group", is_p_power_order_subgroup(commutator_subgroup(induced_subgroup(g, b)), p)});
  r.clauses.push_back({"F^lambda[B] stably untwisted", restriction_stably_untwisted(a, b)});
  return r;
}

// Existential search over normal subgroups; records the witness or the
// candidate with the most satisfied conditions.
template <class Check>
void search_b(const CrossedProduct& a, PredicateResult& out, Check check) {
  std::optional<BCheck> best;
  std::optional<Subgroup> best_b;
  for (const auto& b : normal_subgroups(a.group())) {
    BCheck c = check(b);
    if (c.ok()) {
      out.witness_b = b;
      out.clauses.push_back({"normal subgroup B found (|B| = " + std::to_string(b.size()) + ")", true});
      return;
    }
    if (!best || c.passed() > best->passed()) {
      best = std::move(c);
      best_b = b;
    }
  }
  std::string failing = "none";
  if (best)
    for (const auto& c : best->clauses)
      if (!c.value) {
        failing = c.name;
        break;
      }
  out.clauses.push_back({"normal subgroup B found (closest |B| = " +
                             std::to_string(best_b ? best_b->size() : 0) + " fails: " + failing + ")",
                         false});
}

bool start_predicate(const CrossedProduct& a, PredicateResult& out) {
  const bool twisted = a.twisting().sigma_trivial();
  out.clauses.push_back({"twisted group algebra (sigma trivial)", twisted});
  if (!twisted) return false;
  out.clauses.push_back({"commutative", a.is_commutative()});
  return true;
}

}  // namespace

PredicateResult corollary1_predicate(const CrossedProduct& alg) {
  PredicateResult out;
  if (!start_predicate(alg, out)) return out;
  const CrossedProduct a = normalized(alg);
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  const bool commutative = out.clauses.back().value;
  const bool nil = nilpotency_class(g).has_value();
  const bool gp = is_p_power_order_subgroup(commutator_subgroup(g), p);
  const bool su = stably_untwisted_test(a).stably_untwisted;
  out.clauses.push_back({"G nilpotent", nil});
  out.clauses.push_back({"G' is a p-group", gp});
  out.clauses.push_back({"stably untwisted", su});
  out.value = commutative || (nil && gp && su);
  return out;
}

PredicateResult theorem1_predicate(const CrossedProduct& alg) {
  PredicateResult out;
  if (!start_predicate(alg, out)) return out;
  const CrossedProduct a = normalized(alg);
  const Group& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  const bool commutative = out.clauses.back().value;
  const bool nil = nilpotency_class(g).has_value();
  const bool gp = is_p_power_order_subgroup(commutator_subgroup(g), p);
  const bool closure = untwisted_closure_check(a).holds;
  const bool comm = commutator_condition_check(a).holds;
  out.clauses.push_back({"G nilpotent", nil});
  out.clauses.push_back({"G' has p-power order", gp});
  out.clauses.push_back({"untwisted p-elements form a subgroup", closure});
  out.clauses.push_back({"commutator condition", comm});
  out.value = commutative || (nil && gp && closure && comm);
  return out;
}

PredicateResult theorem2_predicate(const CrossedProduct& alg, unsigned /*n*/, unsigned m) {
  if (m < 1) throw UsageError("m must be positive");
  PredicateResult out;
  if (!start_predicate(alg, out)) return out;
  const CrossedProduct a = normalized(alg);
  const bool commutative = out.clauses.back().value;
  search_b(a, out, [&](const Subgroup& b) { return theorem2_b(a, b, m); });
  const bool found = out.clauses.back().value;
  const bool closure = untwisted_closure_check(a).holds;
  const bool comm = commutator_condition_check(a).holds;
  out.clauses.push_back({"untwisted p-elements form a subgroup", closure});
  out.clauses.push_back({"commutator condition", comm});
  out.value = commutative || (found && closure && comm);
  return out;
}

PredicateResult corollary2_predicate(const CrossedProduct& alg) {
  PredicateResult out;
  if (!start_predicate(alg, out)) return out;
  const CrossedProduct a = normalized(alg);
  const bool commutative = out.clauses.back().value;
  const bool nil = nilpotency_class(a.group()).has_value();
  out.clauses.push_back({"G nilpotent", nil});
  search_b(a, out, [&](const Subgroup& b) { return corollary2_b(a, b); });
  const bool found = out.clauses.back().value;
  const bool closure = untwisted_closure_check(a).holds;
  const bool comm = commutator_condition_check(a).holds;
  out.clauses.push_back({"untwisted p-elements form a subgroup", closure});
  out.clauses.push_back({"commutator condition", comm});
  out.value = commutative || (nil && found && closure && comm);
  return out;
}

LemmaTwoReport lemma2_order_check(const CrossedProduct& alg) {
  if (!alg.twisting().sigma_trivial()) throw DomainError("requires trivial sigma");
  const CrossedProduct a = normalized(alg);
  const Group& g = a.group();
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  const auto one = a.identity();
  LemmaTwoReport r;
  for (Index x = 0; x < g.order(); ++x) {
    const std::uint64_t k = element_order(g, x);
    const Elt mu = twist(a.twisting(), x);
    for (Elt gamma = 1; gamma < f.order(); ++gamma) {
      const auto u = a.basis(x, gamma);
      const auto uk = a.power(u, k);
      const Elt s = uk.coeffs[0];
      if (uk.support() != std::vector<Index>{0}) throw InternalError("power of a basis unit left the identity line");
      const std::uint64_t ord = k * f.multiplicative_order(s);
      if (a.power(u, ord) != one) throw InternalError("unit order computation failed");
      if (!is_power_of(ord, p)) continue;
      ++r.checked;
      if (ord != k || f.mul(mu, f.pow(gamma, static_cast<std::int64_t>(k))) != 1) {
        r.holds = false;
        r.failure = "order of " + g.label(x) + "~ gamma differs from ord(" + g.label(x) + ")";
        return r;
      }
    }
  }
  return r;
}

LemmaTwoReport lemma2_product_twist_check(const CrossedProduct& alg) {
  const CrossedProduct a = normalized(alg);
  const Group& g = a.group();
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  const auto one = a.identity();
  const ClosureReport cl = untwisted_closure_check(a);
  LemmaTwoReport r;
  for (const auto& w1 : cl.witnesses)
    for (const auto& w2 : cl.witnesses) {
      ++r.checked;
      const Index ab = g.mul(w1.element, w2.element);
      const std::uint64_t pl = element_order(g, ab);
      const std::string where = pair_label(g, w1.element, w2.element);
      if (!is_power_of(pl, p)) {
        r.holds = false;
        r.failure = "product at " + where + " is not a p-element";
        return r;
      }
      const Elt base = f.mul(f.mul(w1.gamma, w2.gamma), a.twisting().lambda(w1.element, w2.element));
      if (twist(a.twisting(), ab) != f.pow(base, -static_cast<std::int64_t>(pl))) {
        r.holds = false;
        r.failure = "product twist law fails at " + where;
        return r;
      }
      const auto u = a.mul(a.basis(w1.element, w1.gamma), a.basis(w2.element, w2.gamma));
      if (a.power(u, pl) != one || (pl > 1 && a.power(u, pl / p) == one)) {
        r.holds = false;
        r.failure = "order of a~ b~ gamma_1 gamma_2 differs from ord(ab) at " + where;
        return r;
      }
    }
  return r;
}

InstanceVerdict oracle_verdict(const CorpusInstance& inst, const OracleOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  InstanceVerdict v;
  v.id = inst.id;
  v.group_order = inst.twisting.order();
  v.p = inst.twisting.field().characteristic();
  v.degree = inst.twisting.field().degree();
  v.sigma_trivial = inst.twisting.sigma_trivial();
  auto agree = [&](const std::string& name, bool ok) {
    v.agreement.emplace_back(name, ok);
    if (!ok) v.all_agree = false;
  };
  try {
    const CrossedProduct a(inst.twisting);
    const auto gamma = gamma_series(a);
    const auto lower = lower_lie_powers(a);
    const auto upper = upper_lie_powers(a);
    v.gamma_dims = gamma.prime_dims;
    v.lower_dims = lower.prime_dims;
    v.upper_dims = upper.prime_dims;
    v.gamma_index = gamma.index;
    v.lower_index = lower.index;
    v.upper_index = upper.index;

    v.corollary1 = corollary1_predicate(a);
    v.theorem1 = theorem1_predicate(a);
    v.corollary2 = corollary2_predicate(a);
    const unsigned dim = static_cast<unsigned>(a.order());
    v.engel_n = inst.engel_n == 0 ? dim + 1 : inst.engel_n;
    v.engel_m = inst.engel_m;
    v.theorem2 = theorem2_predicate(a, v.engel_n, v.engel_m);

    EngelOptions eo;
    eo.n = dim + 1;
    eo.m = 1;
    eo.samples = opts.samples;
    eo.seed = opts.seed;
    eo.pair_budget = opts.pair_budget;
    std::uint64_t pairs = 1;
    for (unsigned i = 0; i < 2 * dim && pairs <= opts.pair_budget; ++i) pairs *= a.field().order();
    eo.strategy = pairs <= opts.pair_budget ? EngelStrategy::Exhaustive : EngelStrategy::Randomized;
    const auto er = engel_check(a, eo);
    v.engel.exhaustive = eo.strategy == EngelStrategy::Exhaustive;
    v.engel.seed = eo.seed;
    v.engel.b_checked = er.b_checked;
    v.engel.minimal_n = er.minimal_n;
    v.engel.engel = er.minimal_n.has_value();
    v.engel.holds_at_budget = er.holds;
    v.engel.counterexample = er.counterexample;
    if (v.engel_n == eo.n && v.engel_m == 1) {
      v.engel.nm_holds = er.holds;
    } else {
      EngelOptions nm = eo;
      nm.n = v.engel_n;
      nm.m = v.engel_m;
      v.engel.nm_holds = engel_check(a, nm).holds;
    }

    const bool lower_nil = lower.index.has_value();
    const bool upper_nil = upper.index.has_value();
    agree("corollary1 <-> lower Lie nilpotent", lower_nil == v.corollary1.value);
    agree("corollary1 <-> upper Lie nilpotent", upper_nil == v.corollary1.value);
    agree("Lie nilpotent => theorem1", !(lower_nil || upper_nil) || v.theorem1.value);
    if (v.theorem1.value && !lower_nil) v.notes.push_back("theorem1 predicate holds but the algebra is not Lie nilpotent");
    if (v.engel.exhaustive) {
      agree("corollary2 <-> Engel", v.engel.holds_at_budget == v.corollary2.value);
      agree("(n,m)-Engel => theorem2", !v.engel.nm_holds || v.theorem2.value);
      agree("Engel <-> gamma series vanishes", v.engel.engel == gamma.index.has_value());
    } else {
      agree("corollary2 true => no Engel counterexample", !(v.corollary2.value && v.engel.counterexample));
      if (v.engel.nm_holds && !v.theorem2.value)
        v.notes.push_back("no sampled (n,m)-Engel counterexample but theorem2 predicate is false");
    }
    if (v.theorem2.value && !v.engel.nm_holds)
      v.notes.push_back("theorem2 predicate holds but the algebra is not (n,m)-Engel");
    agree("gamma series vanishes => no Engel counterexample", !gamma.index || !v.engel.counterexample);
    if (!v.sigma_trivial)
      agree("crossed product with nontrivial sigma is neither Lie nilpotent nor Engel",
            !lower_nil && !upper_nil && !v.engel.engel);

    if (v.sigma_trivial && (lower_nil || upper_nil)) {
      const std::uint32_t p = v.p;
      const Group& g = a.group();
      if (lower_nil) agree("central powers at lower index", central_power_check(a, ceil_log(*lower.index, p)).holds);
      if (upper_nil) agree("central powers at upper index", central_power_check(a, ceil_log(*upper.index, p)).holds);
      agree("G' is a p-group", is_power_of(commutator_subgroup(g).size(), p));
      agree("R^[2] is a nil ideal", is_nil_ideal(a, lower.term(2)));
      agree("product twist law", lemma2_product_twist_check(a).holds);
      agree("unit orders of p-power order", lemma2_order_check(a).holds);
    }
  } catch (const std::exception& e) {
    v.notes.push_back(std::string("error: ") + e.what());
    v.all_agree = false;
  }
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<InstanceVerdict> oracle_compare(const std::vector<CorpusInstance>& corpus, const OracleOptions& opts) {
  std::vector<InstanceVerdict> out(corpus.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) out[i] = oracle_verdict(corpus[i], opts);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace tga
