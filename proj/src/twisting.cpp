#include "tga/twisting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "tga/error.hpp"
#include "tga/modlinear.hpp"

namespace tga {

std::string to_string(ValidationReport::Kind kind) {
  switch (kind) {
    case ValidationReport::Kind::Ok: return "ok";
    case ValidationReport::Kind::ZeroEntry: return "zero_entry";
    case ValidationReport::Kind::SigmaRange: return "sigma_range";
    case ValidationReport::Kind::SigmaHomomorphism: return "sigma_homomorphism";
    case ValidationReport::Kind::Cocycle: return "cocycle";
  }
  return "unknown";
}

TwistingData::TwistingData(GroupPtr group, FieldPtr field)
    : group_(std::move(group)), field_(std::move(field)) {
  if (!group_ || !field_) throw UsageError("twisting data needs a group and a field");
  sigma_.assign(order(), 0);
  lambda_.assign(order() * order(), 1);
}

TwistingData::TwistingData(GroupPtr group, FieldPtr field, std::vector<unsigned> sigma, std::vector<Elt> lambda)
    : group_(std::move(group)), field_(std::move(field)), sigma_(std::move(sigma)), lambda_(std::move(lambda)) {
  if (!group_ || !field_) throw UsageError("twisting data needs a group and a field");
  if (sigma_.empty()) sigma_.assign(order(), 0);
  if (sigma_.size() != order()) throw ValidationError("sigma must have one entry per group element");
  if (lambda_.size() != order() * order()) throw ValidationError("lambda must be a |G| x |G| table");
  for (Elt v : lambda_)
    if (!field_->contains(v)) throw ValidationError("lambda entry outside the field");
}

bool TwistingData::sigma_trivial() const {
  return std::all_of(sigma_.begin(), sigma_.end(), [](unsigned e) { return e == 0; });
}

void TwistingData::set_lambda(Index g, Index h, Elt v) {
  if (g >= order() || h >= order()) throw UsageError("group index out of range");
  if (!field_->contains(v)) throw UsageError("value outside the field");
  lambda_[static_cast<std::size_t>(g) * order() + h] = v;
  validated_ = false;
}

const ValidationReport& TwistingData::validate() {
  report_ = check_twisting(*this);
  validated_ = report_.ok();
  return report_;
}

void TwistingData::require_validated(const char* op) const {
  if (!validated_) throw UsageError(std::string(op) + " requires validated twisting data");
}

bool TwistingData::is_normalized() const { return lambda(0, 0) == 1; }

ValidationReport check_twisting(const TwistingData& t) {
  const Group& g = t.group();
  const Field& f = t.field();
  const std::size_t n = g.order();
  ValidationReport r;
  auto fail = [&](ValidationReport::Kind k, Index a, Index b, Index c, const std::string& msg) {
    r.kind = k;
    r.a = a;
    r.b = b;
    r.c = c;
    r.message = msg;
    return r;
  };
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (t.lambda(a, b) == 0) {
        std::ostringstream s;
        s << "lambda(" << g.label(a) << ", " << g.label(b) << ") is zero";
        return fail(ValidationReport::Kind::ZeroEntry, a, b, 0, s.str());
      }
  for (Index a = 0; a < n; ++a)
    if (t.sigma(a) >= f.degree()) {
      std::ostringstream s;
      s << "sigma(" << g.label(a) << ") = " << t.sigma(a) << " is not below the field degree " << f.degree();
      return fail(ValidationReport::Kind::SigmaRange, a, 0, 0, s.str());
    }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if ((t.sigma(a) + t.sigma(b)) % f.degree() != t.sigma(g.mul(a, b))) {
        std::ostringstream s;
        s << "sigma is not a homomorphism at (" << g.label(a) << ", " << g.label(b) << ")";
        return fail(ValidationReport::Kind::SigmaHomomorphism, a, b, 0, s.str());
      }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = g.mul(a, b);
      for (Index c = 0; c < n; ++c) {
        const Elt lhs = f.mul(t.lambda(a, g.mul(b, c)), t.lambda(b, c));
        const Elt rhs = f.mul(t.lambda(ab, c), f.frobenius(t.lambda(a, b), t.sigma(c)));
        if (lhs != rhs) {
          std::ostringstream s;
          s << "cocycle identity fails at (" << g.label(a) << ", " << g.label(b) << ", " << g.label(c) << ")";
          return fail(ValidationReport::Kind::Cocycle, a, b, c, s.str());
        }
      }
    }
  return r;
}

namespace {

void require_trivial_sigma(const TwistingData& t, const char* op) {
  if (!t.sigma_trivial()) throw DomainError(std::string(op) + " is only supported for trivial sigma");
}

TwistingData validated(TwistingData t, const char* op) {
  const auto& r = t.validate();
  if (!r.ok()) throw InternalError(std::string(op) + " produced invalid twisting data: " + r.message);
  return t;
}

// Coboundary system x_g + x_h - x_{gh} = b(g,h) over Z/m, one row per pair.
ModMatrix coboundary_matrix(const Group& g, std::uint64_t m) {
  const std::size_t n = g.order();
  ModMatrix a(n * n, n, m);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const std::size_t row = static_cast<std::size_t>(x) * n + y;
      a.add(row, x, 1);
      a.add(row, y, 1);
      a.add(row, g.mul(x, y), -1);
    }
  return a;
}

std::shared_ptr<const ModDiagonalization> coboundary_system(const Group& g, std::uint64_t m) {
  using Key = std::pair<std::vector<std::vector<Index>>, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ModDiagonalization>> cache;
  Key key{g.table(), m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto diag = std::make_shared<const ModDiagonalization>(coboundary_matrix(g, m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), diag).first->second;
}

std::vector<std::uint64_t> lambda_logs(const TwistingData& t) {
  const Field& f = t.field();
  std::vector<std::uint64_t> b(t.lambda_table().size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = f.discrete_log(t.lambda_table()[i]);
  return b;
}

}  // namespace

TwistingData normalize(const TwistingData& t) {
  t.require_validated("normalize");
  require_trivial_sigma(t, "normalize");
  DiagonalRescaling d;
  d.d.assign(t.order(), t.field().inv(t.lambda(0, 0)));
  return diagonal_rescale(t, d);
}

TwistingData diagonal_rescale(const TwistingData& t, const DiagonalRescaling& d) {
  require_trivial_sigma(t, "diagonal_rescale");
  const Group& g = t.group();
  const Field& f = t.field();
  const std::size_t n = g.order();
  if (d.d.size() != n) throw UsageError("rescaling needs one entry per group element");
  for (Elt v : d.d)
    if (v == 0 || !f.contains(v)) throw UsageError("rescaling entries must be nonzero field elements");
  std::vector<Elt> lam(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      lam[static_cast<std::size_t>(a) * n + b] =
          f.div(f.mul(t.lambda(a, b), f.mul(d.d[a], d.d[b])), d.d[g.mul(a, b)]);
  return validated(TwistingData(t.group_ptr(), t.field_ptr(), t.sigma_table(), std::move(lam)), "diagonal_rescale");
}

TwistingData coboundary(GroupPtr group, FieldPtr field, const DiagonalRescaling& d) {
  TwistingData trivial(group, field);
  trivial.validate();
  return diagonal_rescale(trivial, d);
}

DiagonalRescaling lemma5_rescaling(const TwistingData& t, const Subgroup& h) {
  t.require_validated("lemma5_rescaling");
  require_trivial_sigma(t, "lemma5_rescaling");
  const Group& g = t.group();
  for (Index a : h.members)
    for (Index b : h.members)
      if (t.lambda(a, b) != 1)
        throw DomainError("lambda is not identically 1 on H x H at (" + g.label(a) + ", " + g.label(b) + ")");
  const Quotient q = quotient_group(g, h);
  DiagonalRescaling d;
  d.d.assign(g.order(), 1);
  for (Index x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    const Index u = q.transversal[q.coset_of[x]];
    const Index z = g.mul(x, g.inv(u));
    if (!h.contains(z)) throw InternalError("coset decomposition left H");
    d.d[x] = t.lambda(z, u);
  }
  const Field& f = t.field();
  for (Index a : h.members)
    for (Index x = 0; x < g.order(); ++x)
      if (f.div(f.mul(t.lambda(a, x), f.mul(d.d[a], d.d[x])), d.d[g.mul(a, x)]) != 1)
        throw InternalError("rescaled cocycle is not 1 on H x G");
  return d;
}

Elt twist(const TwistingData& t, Index h) {
  require_trivial_sigma(t, "twist");
  const Group& g = t.group();
  const Field& f = t.field();
  if (h >= g.order()) throw UsageError("group index out of range");
  const std::uint64_t k = element_order(g, h);
  Elt mu = 1;
  Index hi = h;
  for (std::uint64_t i = 1; i < k; ++i) {
    mu = f.mul(mu, t.lambda(hi, h));
    hi = g.mul(hi, h);
  }
  return mu;
}

std::vector<Elt> twist_table(const TwistingData& t) {
  std::vector<Elt> out(t.order());
  for (Index h = 0; h < t.order(); ++h) out[h] = twist(t, h);
  return out;
}

Subgroup w_subgroup(const TwistingData& t) {
  t.require_validated("w_subgroup");
  require_trivial_sigma(t, "w_subgroup");
  if (!t.is_normalized()) throw UsageError("w_subgroup requires normalized twisting data");
  const std::size_t n = t.order();
  Subgroup w;
  for (Index x = 0; x < n; ++x) {
    bool ok = true;
    for (Index y = 0; y < n && ok; ++y) ok = t.lambda(y, x) == 1 && t.lambda(x, y) == 1;
    if (ok) w.members.push_back(x);
  }
  if (!is_subgroup(t.group(), w.members)) throw InternalError("W is not closed under multiplication");
  return w;
}

InducedCocycle induced_cocycle(const TwistingData& t, const Subgroup& h) {
  t.require_validated("induced_cocycle");
  require_trivial_sigma(t, "induced_cocycle");
  const Group& g = t.group();
  const Subgroup w = w_subgroup(t);
  for (Index x : h.members)
    if (!w.contains(x)) throw DomainError("H is not contained in W: " + g.label(x) + " is outside W");
  Quotient q = quotient_group(g, h);
  const std::size_t m = q.group.order();
  std::vector<Elt> mu(m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) mu[static_cast<std::size_t>(i) * m + j] = t.lambda(q.transversal[i], q.transversal[j]);
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (t.lambda(a, b) != mu[static_cast<std::size_t>(q.coset_of[a]) * m + q.coset_of[b]])
        throw InternalError("lambda is not constant on cosets at (" + g.label(a) + ", " + g.label(b) + ")");
  auto qg = std::make_shared<const Group>(q.group);
  TwistingData induced(qg, t.field_ptr(), std::vector<unsigned>(m, 0), std::move(mu));
  return InducedCocycle{std::move(q), validated(std::move(induced), "induced_cocycle")};
}

TwistingData restrict_to_subgroup(const TwistingData& t, const Subgroup& h) {
  auto sub = std::make_shared<const Group>(induced_subgroup(t.group(), h));
  const std::size_t m = h.size();
  std::vector<unsigned> sigma(m);
  std::vector<Elt> lam(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    sigma[i] = t.sigma(h.members[i]);
    for (std::size_t j = 0; j < m; ++j) lam[i * m + j] = t.lambda(h.members[i], h.members[j]);
  }
  TwistingData r(sub, t.field_ptr(), std::move(sigma), std::move(lam));
  if (t.is_validated()) return validated(std::move(r), "restrict_to_subgroup");
  return r;
}

std::optional<DiagonalRescaling> coboundary_solve(const TwistingData& t) {
  require_trivial_sigma(t, "coboundary_solve");
  const Field& f = t.field();
  const std::uint64_t m = f.order() - 1;
  const auto sys = coboundary_system(t.group(), m);
  const auto x = sys->solve(lambda_logs(t));
  if (!x) return std::nullopt;
  DiagonalRescaling d;
  d.d.resize(t.order());
  for (std::size_t i = 0; i < d.d.size(); ++i) d.d[i] = f.exp((*x)[i]);
  const Group& g = t.group();
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (f.div(f.mul(d.d[a], d.d[b]), d.d[g.mul(a, b)]) != t.lambda(a, b))
        throw InternalError("coboundary witness failed replay");
  return d;
}

std::vector<std::uint64_t> cohomology_class_key(const TwistingData& t) {
  require_trivial_sigma(t, "cohomology_class_key");
  const auto sys = coboundary_system(t.group(), t.field().order() - 1);
  return sys->coset_key(lambda_logs(t));
}

CocycleEnumeration enumerate_cocycles(GroupPtr group, FieldPtr field, const EnumerateOptions& opts) {
  const Group& g = *group;
  const Field& f = *field;
  const std::size_t n = g.order();
  const std::uint64_t m = f.order() - 1;
  const std::size_t k = n - 1;  // non-identity elements
  auto var = [&](Index a, Index b) { return static_cast<std::size_t>(a - 1) * k + (b - 1); };

  // Normalized cocycles vanish on pairs involving the identity, so only
  // triples of non-identity elements give equations.  Duplicate and empty
  // rows are dropped before diagonalization.
  std::set<std::vector<std::int64_t>> rows;
  for (Index a = 1; a < n; ++a)
    for (Index b = 1; b < n; ++b)
      for (Index c = 1; c < n; ++c) {
        std::vector<std::int64_t> row(k * k, 0);
        auto term = [&](Index x, Index y, std::int64_t s) {
          if (x != 0 && y != 0) row[var(x, y)] += s;
        };
        term(a, g.mul(b, c), 1);
        term(b, c, 1);
        term(g.mul(a, b), c, -1);
        term(a, b, -1);
        for (auto& v : row) v = ((v % static_cast<std::int64_t>(m)) + m) % m;
        if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) rows.insert(std::move(row));
      }
  ModMatrix a(rows.size(), k * k, m);
  std::size_t r = 0;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) a.set(r, c, row[c]);
    ++r;
  }
  const ModDiagonalization diag(std::move(a), false);

  CocycleEnumeration out;
  out.total = diag.kernel_size();
  std::set<std::vector<std::uint64_t>> seen;
  out.scanned = diag.enumerate_kernel(
      [&](const std::vector<std::uint64_t>& x) {
        std::vector<Elt> lam(n * n, 1);
        for (Index u = 1; u < n; ++u)
          for (Index v = 1; v < n; ++v) lam[static_cast<std::size_t>(u) * n + v] = f.exp(x[var(u, v)]);
        TwistingData t(group, field, std::vector<unsigned>(n, 0), std::move(lam));
        if (opts.dedup && !seen.insert(cohomology_class_key(t)).second) return true;
        out.cocycles.push_back(validated(std::move(t), "enumerate_cocycles"));
        return opts.limit == 0 || out.cocycles.size() < opts.limit;
      },
      opts.budget);
  out.complete = out.scanned >= out.total;
  return out;
}

TwistingData lift_to_extension(const TwistingData& t, FieldPtr extension) {
  const Field& base = t.field();
  if (base.degree() != 1) throw UsageError("lift_to_extension expects a prime base field");
  if (extension->characteristic() != base.characteristic())
    throw UsageError("extension has a different characteristic");
  if (!t.sigma_trivial()) throw DomainError("lift_to_extension requires trivial sigma");
  TwistingData r(t.group_ptr(), extension, std::vector<unsigned>(t.order(), 0), t.lambda_table());
  if (t.is_validated()) return validated(std::move(r), "lift_to_extension");
  return r;
}

}  // namespace tga
