#pragma once

// Row kernels for exact linear algebra over GF(p), p < 2^16.
//
// Each kernel has a portable scalar reference in tga::kernels::scalar and,
// on x86-64, an AVX2 variant in tga::kernels::avx2 that handles p < 256
// (16-bit lanes) and falls back to scalar otherwise.  dispatch() picks the
// widest variant the running CPU supports; the test suite checks that every
// variant agrees with the scalar reference bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace tga::kernels {

using Lane = std::uint16_t;

struct KernelSet {
  /// dst[i] = (dst[i] + c * src[i]) mod p.  Inputs must lie in [0, p).
  void (*axpy)(std::span<Lane> dst, std::span<const Lane> src, Lane c, std::uint32_t p);
  /// dst[i] = (c * dst[i]) mod p.
  void (*scale)(std::span<Lane> dst, Lane c, std::uint32_t p);
  /// True when every entry is zero.
  bool (*is_zero)(std::span<const Lane> v);
  std::string_view name;
};

namespace scalar {
void axpy(std::span<Lane> dst, std::span<const Lane> src, Lane c, std::uint32_t p);
void scale(std::span<Lane> dst, Lane c, std::uint32_t p);
bool is_zero(std::span<const Lane> v);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TGA_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(std::span<Lane> dst, std::span<const Lane> src, Lane c, std::uint32_t p);
void scale(std::span<Lane> dst, Lane c, std::uint32_t p);
bool is_zero(std::span<const Lane> v);
}  // namespace avx2
#endif

const KernelSet& scalar_set();
/// AVX2 set when compiled in and supported by the CPU, else nullptr.
const KernelSet* avx2_set();
/// Selected once per process; TGA_KERNELS=scalar forces the reference path.
const KernelSet& dispatch();

}  // namespace tga::kernels
