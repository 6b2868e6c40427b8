#include "finsler/jets/kernels.hpp"

namespace finsler::jets {
namespace {

void multiply_scalar(const double* a, const double* b, double* out, std::size_t ntargets,
                     const std::uint32_t* offsets, const std::uint32_t* lhs, const std::uint32_t* rhs) {
  for (std::size_t t = 0; t < ntargets; ++t) {
    const std::uint32_t begin = offsets[t];
    const std::uint32_t len = offsets[t + 1] - begin;
    const std::uint32_t half = len / 2;
    const std::uint32_t* l = lhs + begin;
    const std::uint32_t* r = rhs + begin;
    double s = 0.0;
    for (std::uint32_t k = 0; k < half; ++k) s += a[l[k]] * b[r[k]] + a[r[k]] * b[l[k]];
    if (len & 1u) s += a[l[half]] * b[l[half]];
    out[t] = s;
  }
}

double pair_dot_scalar(const double* a, const double* b, const std::uint32_t* lhs, const std::uint32_t* rhs,
                       std::size_t count) {
  double s = 0.0;
  for (std::size_t k = 0; k < count; ++k) s += a[lhs[k]] * b[rhs[k]];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", multiply_scalar, pair_dot_scalar, axpy_scalar};
  return table;
}

}  // namespace finsler::jets
