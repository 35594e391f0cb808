#if defined(TILTSVM_HAVE_AVX2)

#include <immintrin.h>

#include "vecops_impl.hpp"

// AVX2 backend.  Must match vecops_scalar.cpp bit-for-bit: same per-element
// expression trees, same 4-lane reduction order, mul+add only (no FMA).

namespace tiltsvm::vecops::detail {
namespace {

// (l0+l1)+(l2+l3), the combine order of the scalar reference.
inline double reduce4(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);    // l0, l1
  const __m128d hi = _mm256_extractf128_pd(v, 1);  // l2, l3
  const __m128d lo_sum = _mm_hadd_pd(lo, lo);      // l0+l1
  const __m128d hi_sum = _mm_hadd_pd(hi, hi);      // l2+l3
  return _mm_cvtsd_f64(_mm_add_sd(lo_sum, hi_sum));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double r = reduce4(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void dot_batch_avx2(const double* x_cm, std::size_t n, std::size_t p,
                    const double* z, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t f = 0; f < p; ++f) {
      const __m256d col = _mm256_loadu_pd(x_cm + f * n + i);
      const __m256d zf = _mm256_set1_pd(z[f]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(col, zf));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t f = 0; f < p; ++f) acc += x_cm[f * n + i] * z[f];
    out[i] = acc;
  }
}

void sqdist_batch_avx2(const double* x_cm, std::size_t n, std::size_t p,
                       const double* z, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t f = 0; f < p; ++f) {
      const __m256d col = _mm256_loadu_pd(x_cm + f * n + i);
      const __m256d zf = _mm256_set1_pd(z[f]);
      const __m256d d = _mm256_sub_pd(col, zf);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t f = 0; f < p; ++f) {
      const double d = x_cm[f * n + i] - z[f];
      acc += d * d;
    }
    out[i] = acc;
  }
}

void affine_avx2(const double* x, std::size_t n, double a, double b,
                 double* out) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(va, vx), vb));
  }
  for (; i < n; ++i) out[i] = a * x[i] + b;
}

void grad_update_avx2(double* g, const double* y, const double* ki,
                      const double* kj, double ci, double cj, std::size_t n) {
  const __m256d vci = _mm256_set1_pd(ci);
  const __m256d vcj = _mm256_set1_pd(cj);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vki = _mm256_mul_pd(vci, _mm256_loadu_pd(ki + i));
    const __m256d vkj = _mm256_mul_pd(vcj, _mm256_loadu_pd(kj + i));
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vg = _mm256_loadu_pd(g + i);
    _mm256_storeu_pd(
        g + i, _mm256_add_pd(vg, _mm256_mul_pd(vy, _mm256_add_pd(vki, vkj))));
  }
  for (; i < n; ++i) g[i] += y[i] * (ci * ki[i] + cj * kj[i]);
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

const OpsTable avx2_ops = {dot_avx2, dot_batch_avx2, sqdist_batch_avx2,
                           affine_avx2, grad_update_avx2};

}  // namespace tiltsvm::vecops::detail

#endif  // TILTSVM_HAVE_AVX2
