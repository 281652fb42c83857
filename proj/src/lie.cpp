#include "tga/lie.hpp"

#include <algorithm>
#include <random>

#include "tga/error.hpp"

namespace tga {

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::LowerGamma: return "lower-gamma";
    case SeriesKind::LowerPower: return "lower-power";
    case SeriesKind::UpperPower: return "upper-power";
  }
  return "unknown";
}

std::string to_string(EngelStrategy s) { return s == EngelStrategy::Exhaustive ? "exhaustive" : "randomized"; }

const Subspace& SeriesReport::term(unsigned n) const {
  if (n == 0) throw UsageError("series terms are 1-based");
  if (n <= terms.size()) return terms[n - 1];
  if (!terminated && !stabilized) throw UsageError("series term beyond the computed range");
  return terms.back();
}

bool SeriesReport::has_term(unsigned n) const {
  return n >= 1 && (n <= terms.size() || terminated || stabilized);
}

Subspace whole_algebra(const CrossedProduct& a) {
  Subspace s(a.prime_dim(), a.field().characteristic());
  for (std::size_t i = 0; i < a.prime_dim(); ++i) s.insert(a.flatten(a.prime_basis(i)));
  return s;
}

namespace {

template <class Op>
Subspace span_of(const CrossedProduct& a, const Subspace& x, const Subspace& y, Op op) {
  Subspace out(a.prime_dim(), a.field().characteristic());
  std::vector<AlgebraElement> ys;
  for (const auto& row : y.basis()) ys.push_back(a.unflatten(row));
  for (const auto& row : x.basis()) {
    const auto u = a.unflatten(row);
    for (const auto& v : ys) {
      out.insert(a.flatten(op(u, v)));
      if (out.is_full()) return out;
    }
  }
  return out;
}

unsigned default_steps(const CrossedProduct& a, unsigned max_steps) {
  return max_steps == 0 ? static_cast<unsigned>(a.prime_dim() + 2) : max_steps;
}

SeriesReport start_report(const CrossedProduct& a, SeriesKind kind) {
  SeriesReport r;
  r.kind = kind;
  r.degree = a.field().degree();
  return r;
}

void push_term(SeriesReport& r, Subspace s) {
  r.prime_dims.push_back(s.dim());
  if (s.is_zero() && !r.index) {
    r.index = static_cast<unsigned>(r.terms.size() + 1);
    r.terminated = true;
  }
  r.terms.push_back(std::move(s));
}

}  // namespace

Subspace subspace_bracket(const CrossedProduct& a, const Subspace& x, const Subspace& y) {
  return span_of(a, x, y, [&](const AlgebraElement& u, const AlgebraElement& v) { return a.bracket(u, v); });
}

Subspace subspace_product(const CrossedProduct& a, const Subspace& x, const Subspace& y) {
  return span_of(a, x, y, [&](const AlgebraElement& u, const AlgebraElement& v) { return a.mul(u, v); });
}

bool product_contained(const CrossedProduct& a, const Subspace& x, const Subspace& y, const Subspace& z) {
  std::vector<AlgebraElement> ys;
  for (const auto& row : y.basis()) ys.push_back(a.unflatten(row));
  for (const auto& row : x.basis()) {
    const auto u = a.unflatten(row);
    for (const auto& v : ys)
      if (!z.contains(a.flatten(a.mul(u, v)))) return false;
  }
  return true;
}

SeriesReport gamma_series(const CrossedProduct& a, unsigned max_steps) {
  if (max_steps == 0) max_steps = default_steps(a, 0);
  SeriesReport r = start_report(a, SeriesKind::LowerGamma);
  const Subspace whole = whole_algebra(a);
  push_term(r, whole);
  while (!r.terminated && r.terms.size() < max_steps) {
    Subspace next = subspace_bracket(a, r.terms.back(), whole);
    if (next == r.terms.back()) {
      r.stabilized = true;
      break;
    }
    push_term(r, std::move(next));
  }
  return r;
}

SeriesReport lower_lie_powers(const CrossedProduct& a, unsigned max_steps) {
  if (max_steps == 0) max_steps = default_steps(a, 0);
  const SeriesReport gamma = gamma_series(a, max_steps);
  SeriesReport r = start_report(a, SeriesKind::LowerPower);
  const Subspace whole = whole_algebra(a);
  for (const auto& g : gamma.terms) push_term(r, subspace_product(a, g, whole));
  // R^[n] depends only on gamma_n, so it is constant once gamma is.
  r.stabilized = gamma.stabilized && !r.terminated;
  return r;
}

SeriesReport upper_lie_powers(const CrossedProduct& a, unsigned max_steps) {
  if (max_steps == 0) max_steps = default_steps(a, 0);
  SeriesReport r = start_report(a, SeriesKind::UpperPower);
  const Subspace whole = whole_algebra(a);
  push_term(r, whole);
  while (!r.terminated && r.terms.size() < max_steps) {
    Subspace next = subspace_product(a, subspace_bracket(a, r.terms.back(), whole), whole);
    if (next == r.terms.back()) {
      r.stabilized = true;
      break;
    }
    push_term(r, std::move(next));
  }
  return r;
}

InclusionReport check_power_inclusions(const CrossedProduct& a, const SeriesReport& gamma,
                                       const SeriesReport& lower, const SeriesReport& upper) {
  InclusionReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.holds) rep.failure = what;
    rep.holds = false;
  };
  const unsigned ln = static_cast<unsigned>(lower.terms.size());
  for (unsigned m = 2; m <= ln; ++m)
    for (unsigned n = 2; n <= ln; ++n) {
      if (!lower.has_term(n + m - 2)) continue;
      ++rep.checked;
      if (!product_contained(a, lower.term(m), lower.term(n), lower.term(n + m - 2)))
        fail("R^[" + std::to_string(m) + "] R^[" + std::to_string(n) + "] not in R^[" + std::to_string(n + m - 2) + "]");
    }
  const unsigned un = static_cast<unsigned>(upper.terms.size());
  for (unsigned n = 1; n <= un; ++n)
    for (unsigned m = 1; m <= un; ++m) {
      if (!upper.has_term(n + m - 1)) continue;
      ++rep.checked;
      if (!product_contained(a, upper.term(n), upper.term(m), upper.term(n + m - 1)))
        fail("R^(" + std::to_string(n) + ") R^(" + std::to_string(m) + ") not in R^(" + std::to_string(n + m - 1) + ")");
    }
  const unsigned top = std::max({static_cast<unsigned>(gamma.terms.size()), ln, un});
  for (unsigned n = 1; n <= top; ++n) {
    if (gamma.has_term(n) && lower.has_term(n)) {
      ++rep.checked;
      if (!lower.term(n).contains(gamma.term(n))) fail("gamma_" + std::to_string(n) + " not in R^[" + std::to_string(n) + "]");
    }
    if (lower.has_term(n) && upper.has_term(n)) {
      ++rep.checked;
      if (!upper.term(n).contains(lower.term(n))) fail("R^[" + std::to_string(n) + "] not in R^(" + std::to_string(n) + ")");
    }
  }
  return rep;
}

bool is_nil_ideal(const CrossedProduct& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw DomainError("subspace is not a two-sided ideal");
  Subspace power = ideal;
  while (!power.is_zero()) {
    Subspace next = subspace_product(a, power, ideal);
    if (next == power) return false;
    power = std::move(next);
  }
  return true;
}

StablyUntwistedResult stably_untwisted_test(const CrossedProduct& a) {
  if (!a.twisting().sigma_trivial()) throw DomainError("stably untwisted test requires trivial sigma");
  const Subspace whole = whole_algebra(a);
  const Subspace r2 = subspace_product(a, subspace_bracket(a, whole, whole), whole);
  StablyUntwistedResult out;
  const unsigned n = a.field().degree();
  out.codimension = (a.prime_dim() - r2.dim()) / n;
  out.stably_untwisted = r2.dim() < a.prime_dim();
  if (out.stably_untwisted) {
    out.quotient = quotient_algebra(a, r2);
    if (!out.quotient.is_commutative()) throw InternalError("R / R^[2] is not commutative");
  }
  return out;
}

namespace {

// Rows are the images of the prime basis vectors under a -> [a, c].
PrimeMatrix ad_matrix(const CrossedProduct& alg, const AlgebraElement& c) {
  const std::size_t d = alg.prime_dim();
  PrimeMatrix m(d, alg.field().characteristic());
  for (std::size_t j = 0; j < d; ++j) {
    const auto img = alg.flatten(alg.bracket(alg.prime_basis(j), c));
    std::copy(img.begin(), img.end(), m.row(j).begin());
  }
  return m;
}

struct AdInfo {
  std::optional<unsigned> index;     // nilpotency index of the matrix
  std::optional<std::size_t> first;  // smallest row of M^n that is nonzero
};

PrimeMatrix matrix_pow(const PrimeMatrix& m, unsigned e) {
  PrimeMatrix result = m;
  for (unsigned i = 1; i < e; ++i) result = result.multiply(m);
  return result;
}

std::optional<std::size_t> first_nonzero_row(const PrimeMatrix& m) {
  const auto& k = kernels::dispatch();
  for (std::size_t j = 0; j < m.size(); ++j)
    if (!k.is_zero(m.row(j))) return j;
  return std::nullopt;
}

AdInfo analyze(const PrimeMatrix& m, unsigned n) {
  const std::size_t d = m.size();
  AdInfo info;
  PrimeMatrix power = m;
  for (unsigned e = 1; e <= d; ++e) {
    if (e == n) info.first = first_nonzero_row(power);
    if (power.is_zero()) {
      info.index = e;
      break;
    }
    power = power.multiply(m);
  }
  if (!info.index && n > d) info.first = first_nonzero_row(matrix_pow(m, n));
  return info;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

EngelReport engel_check(const CrossedProduct& alg, const EngelOptions& opts) {
  if (opts.n < 1 || opts.m < 1) throw UsageError("Engel parameters must be positive");
  const std::size_t d = alg.prime_dim();
  const std::uint32_t p = alg.field().characteristic();
  EngelReport rep;
  rep.n = opts.n;
  rep.m = opts.m;
  rep.strategy = opts.strategy;
  rep.seed = opts.seed;

  unsigned worst = 0;
  bool all_nilpotent = true;
  std::optional<std::pair<std::size_t, std::vector<Lane>>> best;  // (a row, b coords)

  auto visit = [&](const std::vector<Lane>& bcoords) {
    const auto b = alg.unflatten(bcoords);
    const auto info = analyze(ad_matrix(alg, alg.power(b, opts.m)), opts.n);
    ++rep.b_checked;
    if (info.index)
      worst = std::max(worst, *info.index);
    else
      all_nilpotent = false;
    if (info.first && (!best || *info.first < best->first)) best.emplace(*info.first, bcoords);
  };

  if (opts.strategy == EngelStrategy::Exhaustive) {
    const std::uint64_t pairs = saturating_pow(alg.field().order(), 2 * alg.order());
    if (pairs > opts.pair_budget)
      throw BudgetError("exhaustive Engel scan needs " + std::to_string(pairs) + " pairs; budget is " +
                        std::to_string(opts.pair_budget) + "; use the randomized strategy");
    std::vector<Lane> digits(d, 0);
    while (true) {
      visit(digits);
      std::size_t i = 0;
      while (i < d && ++digits[i] == p) digits[i++] = 0;
      if (i == d) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    std::vector<Lane> digits(d);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      for (auto& x : digits) x = static_cast<Lane>(dist(rng));
      visit(digits);
    }
  }

  if (best) {
    rep.holds = false;
    const auto a = alg.prime_basis(best->first);
    const auto b = alg.unflatten(best->second);
    const auto bm = alg.power(b, opts.m);
    AlgebraElement chain = a;
    for (unsigned i = 0; i < opts.n; ++i) chain = alg.bracket(chain, bm);
    if (chain.is_zero()) throw InternalError("Engel counterexample failed replay");
    rep.counterexample.emplace(a, b);
  }
  if (all_nilpotent) rep.minimal_n = std::max(worst, 1u);
  return rep;
}

std::pair<std::uint64_t, std::uint64_t> engel_reduce(std::uint64_t n, std::uint64_t m, std::uint32_t p) {
  if (p < 2 || !is_prime(p)) throw UsageError("engel_reduce needs a prime");
  if (n < 1 || m < 1) throw UsageError("Engel parameters must be positive");
  std::uint64_t pl = 1;
  while (m % p == 0) {
    m /= p;
    pl *= p;
  }
  std::uint64_t pt = 1;
  while (pt < n) pt *= p;
  return {pl * pt, m};
}

}  // namespace tga
