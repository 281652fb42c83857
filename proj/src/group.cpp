#include "tga/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tga/error.hpp"

namespace tga {

Group Group::from_table(std::vector<std::vector<Index>> table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw ValidationError("group table row " + std::to_string(a) + " has wrong length");
    for (auto v : table[a])
      if (v >= n) throw ValidationError("group table entry out of range in row " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      throw ValidationError("index 0 is not the identity (fails at element " + std::to_string(a) + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a][b]]++)
        throw ValidationError("table is not a Latin square: row " + std::to_string(a) + " repeats an entry");
      if (col[table[b][a]]++)
        throw ValidationError("table is not a Latin square: column " + std::to_string(a) + " repeats an entry");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "table is not associative at triple (" << a << ", " << b << ", " << c << ")";
          throw ValidationError(os.str());
        }
  if (!labels.empty() && labels.size() != n) throw ValidationError("label count does not match group order");

  Group g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0) g.inverses_[a] = static_cast<Index>(b);
  g.labels_ = std::move(labels);
  return g;
}

std::string Group::label(Index a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

std::vector<std::vector<Index>> Group::table() const {
  std::vector<std::vector<Index>> t(n_, std::vector<Index>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  return t;
}

bool Subgroup::contains(Index g) const { return std::binary_search(members.begin(), members.end(), g); }

Group cyclic(unsigned k) {
  if (k < 1) throw UsageError("cyclic group needs order >= 1");
  std::vector<std::vector<Index>> t(k, std::vector<Index>(k));
  std::vector<std::string> labels(k);
  for (unsigned a = 0; a < k; ++a) {
    labels[a] = a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (unsigned b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  }
  return Group::from_table(std::move(t), std::move(labels));
}

Group dihedral(unsigned order) {
  if (order < 2 || order % 2 != 0) throw UsageError("dihedral group needs an even order >= 2");
  const unsigned k = order / 2;
  std::vector<std::vector<Index>> t(order, std::vector<Index>(order));
  std::vector<std::string> labels(order);
  auto rot = [](unsigned i) { return i == 0 ? std::string("1") : (i == 1 ? std::string("r") : "r^" + std::to_string(i)); };
  for (unsigned x = 0; x < order; ++x) {
    const unsigned a = x % k, b = x / k;
    labels[x] = b == 0 ? rot(a) : (a == 0 ? std::string("s") : rot(a) + "s");
    for (unsigned y = 0; y < order; ++y) {
      const unsigned c = y % k, d = y / k;
      // r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b + d}
      const unsigned e = b == 0 ? (a + c) % k : (a + k - c) % k;
      t[x][y] = e + k * ((b + d) % 2);
    }
  }
  return Group::from_table(std::move(t), std::move(labels));
}

Group quaternion8() {
  // Units +-1, +-i, +-j, +-k encoded as (unit, sign): index = 2 * unit + sign.
  // unit product table: u * v = sign * w.
  static const int w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int s[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Index>> t(8, std::vector<Index>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ s[u][v];
      t[x][y] = static_cast<Index>(2 * w[u][v] + sign);
    }
  return Group::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

Group klein_four() {
  std::vector<std::vector<Index>> t(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return Group::from_table(std::move(t), {"1", "a", "b", "ab"});
}

Group symmetric(unsigned k) {
  if (k < 1 || k > 4) throw UsageError("symmetric group supported for 1 <= k <= 4");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  auto find = [&](const std::vector<unsigned>& q) {
    return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l;
    for (auto v : perms[a]) l += std::to_string(v);
    labels[a] = l;
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<unsigned> c(k);
      for (unsigned i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = find(c);
    }
  }
  return Group::from_table(std::move(t), std::move(labels));
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(static_cast<Index>(x / nb)) + "," + b.label(static_cast<Index>(x % nb)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Index p = a.mul(static_cast<Index>(x / nb), static_cast<Index>(y / nb));
      const Index q = b.mul(static_cast<Index>(x % nb), static_cast<Index>(y % nb));
      t[x][y] = static_cast<Index>(p * nb + q);
    }
  }
  return Group::from_table(std::move(t), std::move(labels));
}

std::uint64_t element_order(const Group& g, Index a) {
  std::uint64_t k = 1;
  Index x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

Index group_commutator(const Group& g, Index a, Index b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

Index power(const Group& g, Index a, std::uint64_t e) {
  Index r = g.identity();
  for (std::uint64_t i = 0; i < e; ++i) r = g.mul(r, a);
  return r;
}

Subgroup trivial_subgroup(const Group&) { return Subgroup{{0}}; }

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Index{0});
  return s;
}

Subgroup generate_subgroup(const Group& g, const std::vector<Index>& gens) {
  std::vector<char> in(g.order(), 0);
  std::deque<Index> queue{g.identity()};
  in[g.identity()] = 1;
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subgroup h;
  for (Index x = 0; x < g.order(); ++x)
    if (in[x]) h.members.push_back(x);
  return h;
}

bool is_subgroup(const Group& g, const std::vector<Index>& members) {
  std::vector<char> in(g.order(), 0);
  for (auto m : members) {
    if (m >= g.order()) return false;
    in[m] = 1;
  }
  if (!in[g.identity()]) return false;
  for (auto a : members) {
    if (!in[g.inv(a)]) return false;
    for (auto b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

std::optional<std::pair<Index, Index>> normality_violation(const Group& g, const Subgroup& h) {
  for (Index x = 0; x < g.order(); ++x)
    for (Index m : h.members)
      if (!h.contains(g.mul(g.mul(g.inv(x), m), x))) return std::make_pair(x, m);
  return std::nullopt;
}

bool is_normal(const Group& g, const Subgroup& h) { return !normality_violation(g, h); }

Subgroup mutual_commutator(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Index> gens;
  for (Index x : a.members)
    for (Index y : b.members) gens.push_back(group_commutator(g, x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generate_subgroup(g, gens);
}

Subgroup commutator_subgroup(const Group& g) { return mutual_commutator(g, whole_group(g), whole_group(g)); }

Subgroup center(const Group& g) {
  Subgroup z;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.members.push_back(x);
  }
  return z;
}

bool is_abelian(const Group& g) { return center(g).size() == g.order(); }

std::size_t conjugacy_class_count(const Group& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t count = 0;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Index y = 0; y < g.order(); ++y) seen[g.mul(g.mul(g.inv(y), x), y)] = 1;
  }
  return count;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (Index x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = whole_group(g);
  while (true) {
    Subgroup next = mutual_commutator(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> nilpotency_class(const Group& g) {
  auto series = lower_central_series(g);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

Quotient quotient_group(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members)) throw DomainError("quotient_group: H is not a subgroup");
  if (auto v = normality_violation(g, h)) {
    std::ostringstream os;
    os << "quotient_group: subgroup is not normal (conjugating " << v->second << " by " << v->first
       << " leaves H)";
    throw DomainError(os.str());
  }
  const std::size_t n = g.order();
  std::vector<Index> transversal;
  std::vector<Index> coset_of(n, static_cast<Index>(-1));
  for (Index x = 0; x < n; ++x) {
    if (coset_of[x] != static_cast<Index>(-1)) continue;
    const Index id = static_cast<Index>(transversal.size());
    transversal.push_back(x);
    for (Index m : h.members) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t k = transversal.size();
  std::vector<std::vector<Index>> t(k, std::vector<Index>(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = g.label(transversal[i]) + "H";
    for (std::size_t j = 0; j < k; ++j) t[i][j] = coset_of[g.mul(transversal[i], transversal[j])];
  }
  return Quotient{Group::from_table(std::move(t), std::move(labels)), std::move(transversal), std::move(coset_of)};
}

Group induced_subgroup(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members)) throw DomainError("induced_subgroup: not a subgroup");
  const std::size_t k = h.size();
  std::vector<std::vector<Index>> t(k, std::vector<Index>(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = g.label(h.members[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const Index prod = g.mul(h.members[i], h.members[j]);
      t[i][j] = static_cast<Index>(std::lower_bound(h.members.begin(), h.members.end(), prod) - h.members.begin());
    }
  }
  return Group::from_table(std::move(t), std::move(labels));
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_element(const Group& g, Index a, std::uint32_t p) { return is_power_of(element_order(g, a), p); }

std::optional<std::uint32_t> prime_of_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return is_power_of(n, d) ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(d)) : std::nullopt;
  return static_cast<std::uint32_t>(n);
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<Index>> found;
  std::deque<Subgroup> queue{trivial_subgroup(g)};
  found.insert(queue.front().members);
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<Index> gens = h.members;
      gens.push_back(x);
      Subgroup k = generate_subgroup(g, gens);
      if (found.insert(k.members).second) queue.push_back(std::move(k));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

bool are_isomorphic(const Group& a, const Group& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  if (n > 10) throw UsageError("are_isomorphic is limited to order <= 10");
  // Greedy generating set of a.
  std::vector<Index> gens;
  Subgroup span = trivial_subgroup(a);
  for (Index x = 0; x < n && span.size() < n; ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generate_subgroup(a, gens);
  }
  std::vector<Index> image(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      // Extend along words in the generators and check homomorphism + bijection.
      std::vector<Index> phi(n, static_cast<Index>(-1));
      phi[0] = 0;
      std::deque<Index> queue{0};
      while (!queue.empty()) {
        const Index x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const Index y = a.mul(x, gens[k]);
          const Index fy = b.mul(phi[x], image[k]);
          if (phi[y] == static_cast<Index>(-1)) {
            phi[y] = fy;
            queue.push_back(y);
          } else if (phi[y] != fy) {
            return false;
          }
        }
      }
      std::vector<char> hit(n, 0);
      for (Index x = 0; x < n; ++x) {
        if (hit[phi[x]]++) return false;
        for (Index y = 0; y < n; ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
      }
      return true;
    }
    const auto ord = element_order(a, gens[i]);
    for (Index y = 0; y < n; ++y) {
      if (element_order(b, y) != ord) continue;
      image[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace tga
