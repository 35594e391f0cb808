#if defined(TILTSVM_HAVE_NEON)

#include <arm_neon.h>

#include "vecops_impl.hpp"

// NEON backend (aarch64, 2 doubles per register).  Bit-identical to the
// scalar reference: the 4-lane reduction runs as two 2-lane accumulators,
// vmulq+vaddq only (never vfmaq).

namespace tiltsvm::vecops::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);  // lanes 0,1
  float64x2_t acc23 = vdupq_n_f64(0.0);  // lanes 2,3
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 =
        vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  // (l0+l1)+(l2+l3)
  double r = vaddvq_f64(acc01) + vaddvq_f64(acc23);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void dot_batch_neon(const double* x_cm, std::size_t n, std::size_t p,
                    const double* z, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t f = 0; f < p; ++f) {
      const float64x2_t col = vld1q_f64(x_cm + f * n + i);
      acc = vaddq_f64(acc, vmulq_f64(col, vdupq_n_f64(z[f])));
    }
    vst1q_f64(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t f = 0; f < p; ++f) acc += x_cm[f * n + i] * z[f];
    out[i] = acc;
  }
}

void sqdist_batch_neon(const double* x_cm, std::size_t n, std::size_t p,
                       const double* z, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t f = 0; f < p; ++f) {
      const float64x2_t d =
          vsubq_f64(vld1q_f64(x_cm + f * n + i), vdupq_n_f64(z[f]));
      acc = vaddq_f64(acc, vmulq_f64(d, d));
    }
    vst1q_f64(out + i, acc);
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

void affine_neon(const double* x, std::size_t n, double a, double b,
                 double* out) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(va, vld1q_f64(x + i)), vb));
  }
  for (; i < n; ++i) out[i] = a * x[i] + b;
}

void grad_update_neon(double* g, const double* y, const double* ki,
                      const double* kj, double ci, double cj, std::size_t n) {
  const float64x2_t vci = vdupq_n_f64(ci);
  const float64x2_t vcj = vdupq_n_f64(cj);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ti = vmulq_f64(vci, vld1q_f64(ki + i));
    const float64x2_t tj = vmulq_f64(vcj, vld1q_f64(kj + i));
    const float64x2_t vy = vld1q_f64(y + i);
    const float64x2_t vg = vld1q_f64(g + i);
    vst1q_f64(g + i, vaddq_f64(vg, vmulq_f64(vy, vaddq_f64(ti, tj))));
  }
  for (; i < n; ++i) g[i] += y[i] * (ci * ki[i] + cj * kj[i]);
}

}  // namespace

const OpsTable neon_ops = {dot_neon, dot_batch_neon, sqdist_batch_neon,
                           affine_neon, grad_update_neon};

}  // namespace tiltsvm::vecops::detail

#endif  // TILTSVM_HAVE_NEON
