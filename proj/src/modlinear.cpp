#include "tga/modlinear.hpp"

#include <limits>
#include <numeric>
#include <utility>

#include "tga/error.hpp"

namespace tga {

namespace {

struct Egcd {
  std::int64_t g, s, t;  // s a + t b = g
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return {a, s0, t0};
}

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

// In-place 2x2 transform on two strided vectors: (x, y) <- (a x + b y, c x + d y).
void combine(std::vector<std::uint64_t>& data, std::size_t stride, std::size_t len, std::size_t ix,
             std::size_t iy, bool by_rows, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
             std::uint64_t m) {
  const std::uint64_t ua = reduce(a, m), ub = reduce(b, m), uc = reduce(c, m), ud = reduce(d, m);
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t& x = by_rows ? data[ix * stride + k] : data[k * stride + ix];
    std::uint64_t& y = by_rows ? data[iy * stride + k] : data[k * stride + iy];
    const std::uint64_t nx = (ua * x + ub * y) % m;
    const std::uint64_t ny = (uc * x + ud * y) % m;
    x = nx;
    y = ny;
  }
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  auto e = egcd(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m));
  if (e.g != 1) throw DomainError("element is not invertible modulo m");
  return reduce(e.s, m);
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), m_(modulus), data_(rows * cols, 0) {
  if (modulus < 1) throw UsageError("modulus must be >= 1");
  if (modulus > (1ull << 31)) throw UsageError("modulus too large for 64-bit products");
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v, m_); }

void ModMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  data_[r * cols_ + c] = (data_[r * cols_ + c] + reduce(v, m_)) % m_;
}

std::vector<std::uint64_t> ModMatrix::apply(std::span<const std::uint64_t> x) const {
  std::vector<std::uint64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + data_[r * cols_ + c] * (x[c] % m_)) % m_;
    y[r] = acc;
  }
  return y;
}

ModDiagonalization::ModDiagonalization(ModMatrix a, bool track_left)
    : rows_(a.rows_), cols_(a.cols_), m_(a.m_), track_left_(track_left) {
  const std::uint64_t m = m_;
  auto& d = a.data_;
  if (track_left_) u_.assign(rows_ * rows_, 0);
  v_.assign(cols_ * cols_, 0);
  if (track_left_)
    for (std::size_t i = 0; i < rows_; ++i) u_[i * rows_ + i] = 1 % m;
  for (std::size_t i = 0; i < cols_; ++i) v_[i * cols_ + i] = 1 % m;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(d[i * cols_ + k], d[j * cols_ + k]);
    if (track_left_)
      for (std::size_t k = 0; k < rows_; ++k) std::swap(u_[i * rows_ + k], u_[j * rows_ + k]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(d[k * cols_ + i], d[k * cols_ + j]);
    for (std::size_t k = 0; k < cols_; ++k) std::swap(v_[k * cols_ + i], v_[k * cols_ + j]);
  };

  auto scale_row = [&](std::size_t i, std::uint64_t u) {
    for (std::size_t k = 0; k < cols_; ++k) d[i * cols_ + k] = d[i * cols_ + k] * u % m;
    if (track_left_)
      for (std::size_t k = 0; k < rows_; ++k) u_[i * rows_ + k] = u_[i * rows_ + k] * u % m;
  };

  // Pivots are normalized to divisors of m.  An entry the pivot does not
  // divide is folded into it, which strictly lowers the pivot divisor, so the
  // reduction terminates; otherwise plain elimination clears row and column.
  const std::size_t limit = std::min(rows_, cols_);
  for (std::size_t t = 0; t < limit; ++t) {
    bool found = false;
    for (;;) {
      std::size_t pr = rows_, pc = cols_;
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (std::size_t r = t; r < rows_; ++r)
        for (std::size_t c = t; c < cols_; ++c) {
          const std::uint64_t v = d[r * cols_ + c];
          if (v == 0) continue;
          const std::uint64_t g = std::gcd(v, m);
          if (g < best) {
            best = g;
            pr = r;
            pc = c;
          }
        }
      if (pr == rows_) break;
      found = true;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const std::uint64_t x = d[t * cols_ + t], g = best;
      if (x != g) {
        // u x = g with u a unit mod m.
        const std::uint64_t mg = m / g;
        const std::uint64_t u0 = mg == 1 ? 0 : mod_inverse((x / g) % mg, mg);
        std::uint64_t u = u0;
        for (std::uint64_t k = 0; k < g && std::gcd(u, m) != 1; ++k) u = (u0 + k * mg) % m;
        if (std::gcd(u, m) != 1) throw InternalError("no unit normalizes the pivot");
        scale_row(t, u);
      }
      bool folded = false;
      for (std::size_t r = t + 1; r < rows_ && !folded; ++r) {
        const std::uint64_t y = d[r * cols_ + t];
        if (y % g == 0) continue;
        const auto e = egcd(static_cast<std::int64_t>(g), static_cast<std::int64_t>(y));
        const std::int64_t xg = static_cast<std::int64_t>(g) / e.g, yg = static_cast<std::int64_t>(y) / e.g;
        combine(d, cols_, cols_, t, r, true, e.s, e.t, -yg, xg, m);
        if (track_left_) combine(u_, rows_, rows_, t, r, true, e.s, e.t, -yg, xg, m);
        folded = true;
      }
      for (std::size_t c = t + 1; c < cols_ && !folded; ++c) {
        const std::uint64_t y = d[t * cols_ + c];
        if (y % g == 0) continue;
        const auto e = egcd(static_cast<std::int64_t>(g), static_cast<std::int64_t>(y));
        const std::int64_t xg = static_cast<std::int64_t>(g) / e.g, yg = static_cast<std::int64_t>(y) / e.g;
        combine(d, cols_, rows_, t, c, false, e.s, e.t, -yg, xg, m);
        combine(v_, cols_, cols_, t, c, false, e.s, e.t, -yg, xg, m);
        folded = true;
      }
      if (folded) continue;
      for (std::size_t r = t + 1; r < rows_; ++r) {
        const std::uint64_t q = d[r * cols_ + t] / g;
        if (q == 0) continue;
        combine(d, cols_, cols_, t, r, true, 1, 0, -static_cast<std::int64_t>(q), 1, m);
        if (track_left_) combine(u_, rows_, rows_, t, r, true, 1, 0, -static_cast<std::int64_t>(q), 1, m);
      }
      for (std::size_t c = t + 1; c < cols_; ++c) {
        const std::uint64_t q = d[t * cols_ + c] / g;
        if (q == 0) continue;
        combine(d, cols_, rows_, t, c, false, 1, 0, -static_cast<std::int64_t>(q), 1, m);
        combine(v_, cols_, cols_, t, c, false, 1, 0, -static_cast<std::int64_t>(q), 1, m);
      }
      break;
    }
    if (!found) break;
    diag_.push_back(d[t * cols_ + t]);
    rank_ = t + 1;
  }
}

std::optional<std::vector<std::uint64_t>> ModDiagonalization::solve(std::span<const std::uint64_t> b) const {
  if (!track_left_) throw UsageError("solve() needs a left-tracked diagonalization");
  if (b.size() != rows_) throw UsageError("right-hand side has wrong length");
  const std::uint64_t m = m_;
  std::vector<std::uint64_t> c(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < rows_; ++k) acc = (acc + u_[i * rows_ + k] * (b[k] % m)) % m;
    c[i] = acc;
  }
  std::vector<std::uint64_t> y(cols_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    const std::uint64_t g = std::gcd(diag_[i], m);
    if (c[i] % g != 0) return std::nullopt;
    const std::uint64_t mg = m / g;
    y[i] = mg == 1 ? 0 : (c[i] / g) % mg * mod_inverse((diag_[i] / g) % mg, mg) % mg;
  }
  for (std::size_t i = rank_; i < rows_; ++i)
    if (c[i] != 0) return std::nullopt;
  std::vector<std::uint64_t> x(cols_, 0);
  for (std::size_t r = 0; r < cols_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + v_[r * cols_ + k] * y[k]) % m;
    x[r] = acc;
  }
  return x;
}

std::vector<std::uint64_t> ModDiagonalization::coset_key(std::span<const std::uint64_t> b) const {
  if (!track_left_) throw UsageError("coset_key() needs a left-tracked diagonalization");
  if (b.size() != rows_) throw UsageError("vector has wrong length");
  std::vector<std::uint64_t> key(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < rows_; ++k) acc = (acc + u_[i * rows_ + k] * (b[k] % m_)) % m_;
    key[i] = i < rank_ ? acc % std::gcd(diag_[i], m_) : acc;
  }
  return key;
}

std::uint64_t ModDiagonalization::kernel_size() const {
  std::uint64_t total = 1;
  auto mul_sat = [&](std::uint64_t f) {
    if (f != 0 && total > std::numeric_limits<std::uint64_t>::max() / f)
      total = std::numeric_limits<std::uint64_t>::max();
    else
      total *= f;
  };
  for (std::size_t i = 0; i < rank_; ++i) mul_sat(std::gcd(diag_[i], m_));
  for (std::size_t i = rank_; i < cols_; ++i) mul_sat(m_);
  return total;
}

std::uint64_t ModDiagonalization::enumerate_kernel(
    const std::function<bool(const std::vector<std::uint64_t>&)>& visit, std::uint64_t max_count) const {
  const std::uint64_t m = m_;
  // y_i ranges over multiples of m / g_i (i < rank) or all of Z/m.
  std::vector<std::uint64_t> radix(cols_), step(cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    if (i < rank_) {
      const std::uint64_t g = std::gcd(diag_[i], m);
      radix[i] = g;
      step[i] = m / g;
    } else {
      radix[i] = m;
      step[i] = 1;
    }
  }
  std::vector<std::uint64_t> digits(cols_, 0), x(cols_, 0);
  std::uint64_t visited = 0;
  while (visited < max_count) {
    for (std::size_t r = 0; r < cols_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = (acc + v_[r * cols_ + k] * (digits[k] * step[k] % m)) % m;
      x[r] = acc;
    }
    ++visited;
    if (!visit(x)) break;
    std::size_t i = cols_;
    while (i-- > 0) {
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return visited;
}

}  // namespace tga
