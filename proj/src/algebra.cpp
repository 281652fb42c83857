#include "tga/algebra.hpp"

#include <algorithm>

#include "tga/error.hpp"

namespace tga {

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Elt v) { return v == 0; });
}

std::vector<Index> AlgebraElement::support() const {
  std::vector<Index> s;
  for (Index g = 0; g < coeffs.size(); ++g)
    if (coeffs[g] != 0) s.push_back(g);
  return s;
}

bool StructureConstants::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

std::optional<BasisTriple> associativity_violation(const TwistingData& t) {
  const Group& g = t.group();
  const Field& f = t.field();
  const std::size_t n = g.order();
  const Elt gen = f.generator();
  // Basis product g~ alpha . h~ beta -> coefficient of (gh)~.
  auto prod = [&](Index x, Elt alpha, Index y, Elt beta) {
    return f.mul(f.mul(t.lambda(x, y), f.frobenius(alpha, t.sigma(y))), beta);
  };
  const Elt slots[3][3] = {{1, 1, 1}, {gen, 1, 1}, {1, gen, 1}};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (const auto& s : slots) {
          const Elt left = prod(g.mul(a, b), prod(a, s[0], b, s[1]), c, s[2]);
          const Elt right = prod(a, s[0], g.mul(b, c), prod(b, s[1], c, s[2]));
          if (left != right) return BasisTriple{a, b, c};
        }
  return std::nullopt;
}

CrossedProduct::CrossedProduct(TwistingData t) : t_(std::move(t)) {
  for (Elt v : t_.lambda_table())
    if (v == 0) throw ValidationError("twisting function has a zero entry");
  if (const auto bad = associativity_violation(t_)) {
    const Group& g = t_.group();
    throw ValidationError("associativity fails on basis triple (" + g.label(bad->a) + ", " + g.label(bad->b) +
                          ", " + g.label(bad->c) + ")");
  }
  const auto& r = t_.validate();
  if (!r.ok()) throw ValidationError(r.message);
}

AlgebraElement CrossedProduct::zero() const { return AlgebraElement{std::vector<Elt>(order(), 0)}; }

AlgebraElement CrossedProduct::identity() const { return basis(0, field().inv(t_.lambda(0, 0))); }

AlgebraElement CrossedProduct::basis(Index g, Elt alpha) const {
  if (g >= order()) throw UsageError("group index out of range");
  AlgebraElement x = zero();
  x.coeffs[g] = alpha;
  return x;
}

AlgebraElement CrossedProduct::prime_basis(std::size_t index) const {
  const unsigned n = field().degree();
  return basis(static_cast<Index>(index / n), field().basis_element(static_cast<unsigned>(index % n)));
}

AlgebraElement CrossedProduct::add(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement z = zero();
  for (std::size_t i = 0; i < order(); ++i) z.coeffs[i] = field().add(x.coeffs[i], y.coeffs[i]);
  return z;
}

AlgebraElement CrossedProduct::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement z = zero();
  for (std::size_t i = 0; i < order(); ++i) z.coeffs[i] = field().sub(x.coeffs[i], y.coeffs[i]);
  return z;
}

AlgebraElement CrossedProduct::neg(const AlgebraElement& x) const {
  AlgebraElement z = zero();
  for (std::size_t i = 0; i < order(); ++i) z.coeffs[i] = field().neg(x.coeffs[i]);
  return z;
}

AlgebraElement CrossedProduct::scale(const AlgebraElement& x, Elt alpha) const {
  AlgebraElement z = zero();
  for (std::size_t i = 0; i < order(); ++i) z.coeffs[i] = field().mul(x.coeffs[i], alpha);
  return z;
}

AlgebraElement CrossedProduct::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  const Group& g = group();
  const Field& f = field();
  AlgebraElement z = zero();
  for (Index a = 0; a < order(); ++a) {
    const Elt alpha = x.coeffs[a];
    if (alpha == 0) continue;
    for (Index b = 0; b < order(); ++b) {
      const Elt beta = y.coeffs[b];
      if (beta == 0) continue;
      const Elt c = f.mul(f.mul(t_.lambda(a, b), f.frobenius(alpha, t_.sigma(b))), beta);
      const Index ab = g.mul(a, b);
      z.coeffs[ab] = f.add(z.coeffs[ab], c);
    }
  }
  return z;
}

AlgebraElement CrossedProduct::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  return sub(mul(x, y), mul(y, x));
}

AlgebraElement CrossedProduct::power(const AlgebraElement& x, std::uint64_t k) const {
  AlgebraElement result = identity();
  AlgebraElement base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

AlgebraElement CrossedProduct::basis_inverse(Index g) const {
  const Group& grp = group();
  const Field& f = field();
  const Index gi = grp.inv(g);
  // (g^-1)~ c . g~ = 1~ lambda(g^-1, g) c^{sigma(g)} must equal 1~ lambda(1,1)^-1.
  const Elt target = f.inv(f.mul(t_.lambda(gi, g), t_.lambda(0, 0)));
  const unsigned n = f.degree();
  const Elt c = f.frobenius(target, (n - t_.sigma(g) % n) % n);
  AlgebraElement inv = basis(gi, c);
  const AlgebraElement one = identity();
  if (mul(inv, basis(g)) != one || mul(basis(g), inv) != one) throw InternalError("basis inverse failed");
  return inv;
}

bool CrossedProduct::is_commutative() const {
  for (std::size_t i = 0; i < prime_dim(); ++i)
    for (std::size_t j = i + 1; j < prime_dim(); ++j) {
      const auto x = prime_basis(i), y = prime_basis(j);
      if (mul(x, y) != mul(y, x)) return false;
    }
  return true;
}

std::optional<unsigned> CrossedProduct::nilpotency_index(const AlgebraElement& x) const {
  AlgebraElement acc = x;
  for (unsigned k = 1; k <= prime_dim(); ++k) {
    if (acc.is_zero()) return k;
    acc = mul(acc, x);
  }
  return std::nullopt;
}

PrimeVector CrossedProduct::flatten(const AlgebraElement& x) const {
  const Field& f = field();
  const unsigned n = f.degree();
  PrimeVector v(prime_dim(), 0);
  for (std::size_t g = 0; g < order(); ++g)
    for (unsigned i = 0; i < n; ++i) v[g * n + i] = static_cast<Lane>(f.digit(x.coeffs[g], i));
  return v;
}

AlgebraElement CrossedProduct::unflatten(std::span<const Lane> v) const {
  if (v.size() != prime_dim()) throw UsageError("vector dimension mismatch");
  const Field& f = field();
  const unsigned n = f.degree();
  AlgebraElement x = zero();
  std::vector<std::uint32_t> digits(n);
  for (std::size_t g = 0; g < order(); ++g) {
    for (unsigned i = 0; i < n; ++i) digits[i] = v[g * n + i];
    x.coeffs[g] = f.from_coords(digits);
  }
  return x;
}

StructureConstants CrossedProduct::structure_constants() const {
  StructureConstants s;
  s.field = t_.field_ptr();
  s.dim = order();
  s.c.assign(s.dim * s.dim * s.dim, 0);
  for (Index g = 0; g < order(); ++g) {
    s.basis_labels.push_back(g);
    for (Index h = 0; h < order(); ++h) {
      const auto p = mul(basis(g), basis(h));
      for (std::size_t k = 0; k < s.dim; ++k) s.c[(g * s.dim + h) * s.dim + k] = p.coeffs[k];
    }
  }
  return s;
}

UnitCommutator unit_commutator(const CrossedProduct& a, Index g, Index h) {
  const auto x = a.mul(a.mul(a.basis_inverse(g), a.basis_inverse(h)), a.mul(a.basis(g), a.basis(h)));
  const Index c = group_commutator(a.group(), g, h);
  const auto supp = x.support();
  if (supp.size() != 1 || supp[0] != c) throw InternalError("unit commutator is not supported on (g,h)");
  return {c, x.coeffs[c]};
}

Elt chi_closed_form(const TwistingData& t, Index g, Index h) {
  const Group& G = t.group();
  const Field& f = t.field();
  const Index gi = G.inv(g), hi = G.inv(h);
  Elt v = f.inv(f.mul(t.lambda(gi, g), t.lambda(hi, h)));
  v = f.mul(v, f.mul(t.lambda(gi, hi), t.lambda(g, h)));
  return f.mul(v, t.lambda(G.mul(gi, hi), G.mul(g, h)));
}

Elt chi_printed_lemma_form(const TwistingData& t, Index a, Index b) {
  const Group& G = t.group();
  const Field& f = t.field();
  const Index ba = group_commutator(G, b, a), ab = group_commutator(G, a, b);
  const Index conj = G.mul(G.mul(G.inv(a), b), a);
  Elt v = f.inv(t.lambda(b, a));
  v = f.mul(v, t.lambda(a, conj));
  v = f.mul(v, t.lambda(b, ba));
  return f.div(v, t.lambda(ba, ab));
}

Elt chi_printed_condition_base(const TwistingData& t, Index a, Index b) {
  const Group& G = t.group();
  const Field& f = t.field();
  const Index ba = group_commutator(G, b, a), ab = group_commutator(G, a, b);
  const Index conj = G.mul(G.mul(G.inv(b), a), b);
  Elt v = f.inv(t.lambda(a, b));
  v = f.mul(v, t.lambda(b, conj));
  v = f.mul(v, t.lambda(a, ab));
  return f.div(v, t.lambda(ba, ab));
}

Subspace ideal_span(const CrossedProduct& a, const std::vector<AlgebraElement>& generators) {
  const std::size_t d = a.prime_dim();
  Subspace s(d, a.field().characteristic());
  std::vector<AlgebraElement> queue;
  for (const auto& x : generators)
    if (s.insert(a.flatten(x))) queue.push_back(x);
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(a.prime_basis(i));
  while (!queue.empty() && !s.is_full()) {
    const AlgebraElement x = std::move(queue.back());
    queue.pop_back();
    for (const auto& e : basis) {
      for (const auto& y : {a.mul(e, x), a.mul(x, e)})
        if (s.insert(a.flatten(y))) queue.push_back(y);
    }
  }
  return s;
}

Subspace augmentation_ideal(const CrossedProduct& a, const Subgroup& h) {
  const TwistingData& t = a.twisting();
  if (!t.sigma_trivial()) throw DomainError("I(H) requires trivial sigma");
  if (!t.is_normalized()) throw DomainError("I(H) requires normalized lambda");
  const Group& g = a.group();
  if (!is_normal(g, h)) throw DomainError("H is not normal");
  const Subgroup w = w_subgroup(t);
  for (Index x : h.members)
    if (!w.contains(x)) throw DomainError("H is not contained in W");
  const Quotient q = quotient_group(g, h);
  Subspace s(a.prime_dim(), a.field().characteristic());
  const auto one = a.identity();
  for (Index u : q.transversal)
    for (Index x : h.members) {
      if (x == 0) continue;
      const auto v = a.mul(a.basis(u), a.sub(a.basis(x), one));
      for (unsigned i = 0; i < a.field().degree(); ++i)
        s.insert(a.flatten(a.scale(v, a.field().basis_element(i))));
    }
  return s;
}

bool is_two_sided_ideal(const CrossedProduct& a, const Subspace& s) {
  for (const auto& row : s.basis()) {
    const auto x = a.unflatten(row);
    for (std::size_t i = 0; i < a.prime_dim(); ++i) {
      const auto e = a.prime_basis(i);
      if (!s.contains(a.flatten(a.mul(e, x))) || !s.contains(a.flatten(a.mul(x, e)))) return false;
    }
  }
  return true;
}

namespace {

// Inverse of a square GF(p) matrix given by rows; nullopt when singular.
std::optional<std::vector<PrimeVector>> invert(std::vector<PrimeVector> m, std::uint32_t p) {
  const std::size_t n = m.size();
  const PrimeModulus mod(p);
  const auto& k = kernels::dispatch();
  std::vector<PrimeVector> inv(n, PrimeVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Lane s = mod.inv(m[col][col]);
    k.scale(m[col], s, p);
    k.scale(inv[col], s, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Lane c = mod.neg(m[r][col]);
      k.axpy(m[r], m[col], c, p);
      k.axpy(inv[r], inv[col], c, p);
    }
  }
  return inv;
}

}  // namespace

StructureConstants quotient_algebra(const CrossedProduct& a, const Subspace& ideal) {
  if (!a.twisting().sigma_trivial()) throw DomainError("quotient algebras require trivial sigma");
  if (!is_two_sided_ideal(a, ideal)) throw DomainError("subspace is not a two-sided ideal");
  const Field& f = a.field();
  const unsigned n = f.degree();
  const std::uint32_t p = f.characteristic();

  // Greedy complement: group elements in index order.
  Subspace work = ideal;
  std::vector<Index> chosen;
  for (Index g = 0; g < a.order(); ++g) {
    if (work.contains(a.flatten(a.basis(g)))) continue;
    chosen.push_back(g);
    for (unsigned i = 0; i < n; ++i) work.insert(a.flatten(a.basis(g, f.basis_element(i))));
  }
  if (!work.is_full()) throw InternalError("complement construction did not span the algebra");

  // Coordinates with respect to [ideal rows; complement prime vectors].
  std::vector<PrimeVector> rows = ideal.basis();
  for (Index g : chosen)
    for (unsigned i = 0; i < n; ++i) rows.push_back(a.flatten(a.basis(g, f.basis_element(i))));
  const auto inv = invert(rows, p);
  if (!inv) throw InternalError("complement basis is singular");
  const std::size_t offset = ideal.dim();
  const std::size_t d = a.prime_dim();
  const auto& k = kernels::dispatch();

  StructureConstants s;
  s.field = a.twisting().field_ptr();
  s.dim = chosen.size();
  s.basis_labels = chosen;
  s.c.assign(s.dim * s.dim * s.dim, 0);
  std::vector<std::uint32_t> digits(n);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) {
      const auto v = a.flatten(a.mul(a.basis(chosen[i]), a.basis(chosen[j])));
      PrimeVector coords(d, 0);
      for (std::size_t r = 0; r < d; ++r)
        if (v[r] != 0) k.axpy(coords, (*inv)[r], v[r], p);
      for (std::size_t kk = 0; kk < s.dim; ++kk) {
        for (unsigned t = 0; t < n; ++t) digits[t] = coords[offset + kk * n + t];
        s.c[(i * s.dim + j) * s.dim + kk] = f.from_coords(digits);
      }
    }
  return s;
}

bool bracket_identity_holds(const CrossedProduct& a, Index x, Index y) {
  const auto gx = a.basis(x), gy = a.basis(y);
  const auto comm = a.mul(a.mul(a.basis_inverse(x), a.basis_inverse(y)), a.mul(gx, gy));
  const auto rhs = a.mul(a.mul(gy, gx), a.sub(comm, a.identity()));
  return a.bracket(gx, gy) == rhs;
}

bool printed_bracket_identity_holds(const CrossedProduct& a, Index x, Index y) {
  const auto gx = a.basis(x), gy = a.basis(y);
  const auto xi = a.basis_inverse(x), yi = a.basis_inverse(y);
  const auto comm = a.mul(a.mul(xi, yi), a.mul(gx, gy));
  const auto rhs = a.mul(a.mul(xi, yi), a.sub(comm, a.identity()));
  return a.bracket(gx, gy) == rhs;
}

bool square_expansion_holds(const CrossedProduct& alg, const AlgebraElement& a, const AlgebraElement& b,
                            const AlgebraElement& r) {
  auto br = [&](const AlgebraElement& x, const AlgebraElement& y) { return alg.bracket(x, y); };
  const auto ab = alg.mul(a, b);
  const auto lhs_base = alg.mul(br(a, b), r);
  const auto lhs = alg.mul(lhs_base, lhs_base);
  const auto abba = br(br(ab, b), a);
  AlgebraElement rhs = alg.mul(alg.mul(r, abba), r);
  rhs = alg.add(rhs, alg.mul(abba, r));
  rhs = alg.add(rhs, alg.mul(alg.mul(br(br(a, b), a), b), r));
  rhs = alg.add(rhs, alg.mul(alg.mul(br(br(ab, b), r), br(ab, b)), r));
  return lhs == rhs;
}

}  // namespace tga
