#pragma once

// Hot loops with a portable reference variant and an AVX2 variant chosen at
// runtime. Set VARTIN_KERNELS=scalar to force the reference path.

#include <cstdint>
#include <span>
#include <string_view>

namespace vartin::kernels {

struct KernelTable {
  std::string_view name;
  /// Composition of monomial maps, a after b:
  ///   t[i] = ta[tb[i]], x[i] = xb[i] + xa[tb[i]], y[i] = yb[i] + ya[tb[i]].
  void (*compose_monomial)(const std::int32_t* ta, const std::int32_t* xa,
                           const std::int32_t* ya, const std::int32_t* tb,
                           const std::int32_t* xb, const std::int32_t* yb,
                           std::int32_t* t, std::int32_t* x, std::int32_t* y,
                           std::size_t n);
  /// out[i] = a[i] - b[idx[i]].
  void (*gather_sub)(const std::int64_t* a, const std::int64_t* b,
                     const std::int32_t* idx, std::int64_t* out, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when not compiled in or not supported by the CPU.
const KernelTable* avx2_kernels();
/// The table in use for this process.
const KernelTable& active();

}  // namespace vartin::kernels
