#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace finsler::jets {

/// Inner loops of jet arithmetic. Each variant must produce results that
/// agree with the scalar reference to a few ulps; `multiply` must in addition
/// be exactly symmetric in its two inputs.
struct KernelTable {
  const char* name;

  /// out[t] = sum over the factor pairs of t, for t in [0, ntargets).
  /// Mirror pairs are summed together so that swapping a and b is exact.
  void (*multiply)(const double* a, const double* b, double* out, std::size_t ntargets,
                   const std::uint32_t* offsets, const std::uint32_t* lhs, const std::uint32_t* rhs);

  /// sum_k a[lhs[k]] * b[rhs[k]] for k in [0, count).
  double (*pair_dot)(const double* a, const double* b, const std::uint32_t* lhs, const std::uint32_t* rhs,
                     std::size_t count);

  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Table used by jet arithmetic. Chosen once from FINSLER_SIMD
/// (scalar | avx2 | auto, default auto) and CPU capabilities.
const KernelTable& active_kernels();

/// Force a variant by name; returns false if it is unavailable.
bool select_kernels(std::string_view name);

}  // namespace finsler::jets
