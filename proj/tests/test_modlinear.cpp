#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tga/error.hpp"
#include "tga/modlinear.hpp"

namespace tga {
namespace {

std::vector<std::uint64_t> digits(std::uint64_t code, std::size_t n, std::uint64_t m) {
  std::vector<std::uint64_t> x(n);
  for (auto& d : x) {
    d = code % m;
    code /= m;
  }
  return x;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Brute force over (Z/m)^cols on random small systems, including composite m.
TEST(ModLinear, SolveAndKernelAgreeWithBruteForce) {
  std::mt19937_64 rng(3);
  for (std::uint64_t m : {2ull, 3ull, 4ull, 6ull, 8ull, 12ull}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 3;
      ModMatrix a(rows, cols, m);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a.set(r, c, static_cast<std::int64_t>(rng() % m));
      const ModDiagonalization d(a);
      std::uint64_t kernel = 0;
      std::set<std::vector<std::uint64_t>> images;
      for (std::uint64_t code = 0; code < ipow(m, cols); ++code) {
        const auto y = a.apply(digits(code, cols, m));
        images.insert(y);
        kernel += std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; });
      }
      EXPECT_EQ(d.kernel_size(), kernel);
      std::uint64_t visited = 0;
      d.enumerate_kernel(
          [&](const std::vector<std::uint64_t>& x) {
            const auto y = a.apply(x);
            EXPECT_TRUE(std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; }));
            ++visited;
            return true;
          },
          1u << 20);
      EXPECT_EQ(visited, kernel);
      for (std::uint64_t code = 0; code < ipow(m, rows); ++code) {
        const auto b = digits(code, rows, m);
        const auto x = d.solve(b);
        EXPECT_EQ(x.has_value(), images.count(b) == 1);
        if (x) EXPECT_EQ(a.apply(*x), b);
        // Equal keys exactly when b differ by an image vector.
        const auto key = d.coset_key(b);
        const auto key0 = d.coset_key(std::vector<std::uint64_t>(rows, 0));
        EXPECT_EQ(key == key0, images.count(b) == 1);
      }
    }
  }
}

TEST(ModLinear, UntrackedDiagonalizationRefusesSolve) {
  ModMatrix a(2, 2, 4);
  a.set(0, 0, 2);
  const ModDiagonalization d(a, false);
  EXPECT_THROW(d.solve(std::vector<std::uint64_t>{0, 0}), UsageError);
  EXPECT_EQ(d.kernel_size(), 8u);
}

TEST(ModLinear, Inverse) {
  EXPECT_EQ(mod_inverse(3, 7), 5u);
  EXPECT_THROW(mod_inverse(2, 4), DomainError);
}

}  // namespace
}  // namespace tga
