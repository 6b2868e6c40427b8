#include "finsler/jets/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace finsler::jets {
namespace {

inline double hsum(__m256d v) {
  // fixed lane order: (l0 + l2) + (l1 + l3)
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

inline __m128i load_idx(const std::uint32_t* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }

void multiply_avx2(const double* a, const double* b, double* out, std::size_t ntargets,
                   const std::uint32_t* offsets, const std::uint32_t* lhs, const std::uint32_t* rhs) {
  for (std::size_t t = 0; t < ntargets; ++t) {
    const std::uint32_t begin = offsets[t];
    const std::uint32_t len = offsets[t + 1] - begin;
    const std::uint32_t half = len / 2;
    const std::uint32_t* l = lhs + begin;
    const std::uint32_t* r = rhs + begin;
    std::uint32_t k = 0;
    double s = 0.0;
    if (half >= 4) {
      __m256d acc = _mm256_setzero_pd();
      for (; k + 4 <= half; k += 4) {
        const __m128i li = load_idx(l + k);
        const __m128i ri = load_idx(r + k);
        // separate multiplies keep the pair sum symmetric in (a, b)
        const __m256d p = _mm256_mul_pd(_mm256_i32gather_pd(a, li, 8), _mm256_i32gather_pd(b, ri, 8));
        const __m256d q = _mm256_mul_pd(_mm256_i32gather_pd(a, ri, 8), _mm256_i32gather_pd(b, li, 8));
        acc = _mm256_add_pd(acc, _mm256_add_pd(p, q));
      }
      s = hsum(acc);
    }
    for (; k < half; ++k) s += a[l[k]] * b[r[k]] + a[r[k]] * b[l[k]];
    if (len & 1u) s += a[l[half]] * b[l[half]];
    out[t] = s;
  }
}

double pair_dot_avx2(const double* a, const double* b, const std::uint32_t* lhs, const std::uint32_t* rhs,
                     std::size_t count) {
  std::size_t k = 0;
  double s = 0.0;
  if (count >= 4) {
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= count; k += 4) {
      const __m256d x = _mm256_i32gather_pd(a, load_idx(lhs + k), 8);
      const __m256d y = _mm256_i32gather_pd(b, load_idx(rhs + k), 8);
      acc = _mm256_fmadd_pd(x, y, acc);
    }
    s = hsum(acc);
  }
  for (; k < count; ++k) s += a[lhs[k]] * b[rhs[k]];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", multiply_avx2, pair_dot_avx2, axpy_avx2};
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace finsler::jets

#else

namespace finsler::jets {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace finsler::jets

#endif
