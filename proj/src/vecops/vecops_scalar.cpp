#include "vecops_impl.hpp"

// Reference backend.  The loops below define the arithmetic contract the SIMD
// backends must reproduce bit-for-bit; keep any change here in lockstep with
// vecops_avx2.cpp and vecops_neon.cpp.

namespace tiltsvm::vecops::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += a[i + 0] * b[i + 0];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  double r = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void dot_batch_scalar(const double* x_cm, std::size_t n, std::size_t p,
                      const double* z, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t f = 0; f < p; ++f) {
    const double* col = x_cm + f * n;
    const double zf = z[f];
    for (std::size_t i = 0; i < n; ++i) out[i] += col[i] * zf;
  }
}

void sqdist_batch_scalar(const double* x_cm, std::size_t n, std::size_t p,
                         const double* z, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t f = 0; f < p; ++f) {
    const double* col = x_cm + f * n;
    const double zf = z[f];
    for (std::size_t i = 0; i < n; ++i) {
      const double d = col[i] - zf;
      out[i] += d * d;
    }
  }
}

void affine_scalar(const double* x, std::size_t n, double a, double b,
                   double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b;
}

void grad_update_scalar(double* g, const double* y, const double* ki,
                        const double* kj, double ci, double cj,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    g[i] += y[i] * (ci * ki[i] + cj * kj[i]);
  }
}

}  // namespace

const OpsTable scalar_ops = {dot_scalar, dot_batch_scalar, sqdist_batch_scalar,
                             affine_scalar, grad_update_scalar};

}  // namespace tiltsvm::vecops::detail
