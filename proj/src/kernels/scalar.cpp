#include <cstdlib>
#include <string_view>

#include "tga/kernels.hpp"

namespace tga::kernels {

namespace scalar {

void axpy(std::span<Lane> dst, std::span<const Lane> src, Lane c, std::uint32_t p) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Lane>((dst[i] + static_cast<std::uint32_t>(c) * src[i]) % p);
}

void scale(std::span<Lane> dst, Lane c, std::uint32_t p) {
  for (auto& v : dst) v = static_cast<Lane>((static_cast<std::uint32_t>(c) * v) % p);
}

bool is_zero(std::span<const Lane> v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace scalar

const KernelSet& scalar_set() {
  static const KernelSet set{&scalar::axpy, &scalar::scale, &scalar::is_zero, "scalar"};
  return set;
}

const KernelSet* avx2_set() {
#ifdef TGA_HAVE_AVX2_KERNELS
  static const KernelSet set{&avx2::axpy, &avx2::scale, &avx2::is_zero, "avx2"};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& dispatch() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const char* env = std::getenv("TGA_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_set();
    if (const KernelSet* s = avx2_set()) return *s;
    return scalar_set();
  }();
  return chosen;
}

}  // namespace tga::kernels
