#include "vartin/kernels.hpp"

namespace vartin::kernels {

namespace {

void compose_monomial(const std::int32_t* ta, const std::int32_t* xa,
                      const std::int32_t* ya, const std::int32_t* tb,
                      const std::int32_t* xb, const std::int32_t* yb,
                      std::int32_t* t, std::int32_t* x, std::int32_t* y,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::int32_t j = tb[i];
    t[i] = ta[j];
    x[i] = xb[i] + xa[j];
    y[i] = yb[i] + ya[j];
  }
}

void gather_sub(const std::int64_t* a, const std::int64_t* b,
                const std::int32_t* idx, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[idx[i]];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", compose_monomial, gather_sub};
  return table;
}

}  // namespace vartin::kernels
