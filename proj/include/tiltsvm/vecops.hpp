#pragma once

#include <cstddef>

// Data-parallel inner loops used by the trainer, the kernel evaluators and the
// feature pipeline.  Every primitive has a scalar reference implementation and
// SIMD variants (AVX2 on x86-64, NEON on aarch64) selected once at runtime.
//
// All backends are bit-for-bit equivalent by construction:
//   * elementwise primitives (dot_batch, sqdist_batch, affine, grad_update)
//     evaluate the exact same per-element expression tree in every backend;
//   * reductions (dot) accumulate into four independent lanes -- lane k sums
//     elements k, k+4, k+8, ... -- combined as (l0+l1)+(l2+l3), with the
//     length%4 tail folded in sequentially afterwards;
//   * no FMA instructions are used and the library builds with
//     -ffp-contract=off, so mul/add never fuse.
// The equivalence suite asserts exact (==) agreement between backends.

namespace tiltsvm::vecops {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

// Backend chosen for this process (auto-detected on first use).
Backend active_backend();

// Force a backend, for tests.  Returns false (and changes nothing) if the
// requested backend is not available on this host.
bool force_backend(Backend b);

// Undo force_backend; returns to auto-detection.
void reset_backend();

// Blocked 4-lane dot product, see reduction contract above.
double dot(const double* a, const double* b, std::size_t n);

// out[i] = sum_f x_cm[f*n + i] * z[f], f ascending.
// x_cm is an n-by-p matrix stored column-major (column f at x_cm + f*n).
void dot_batch(const double* x_cm, std::size_t n, std::size_t p,
               const double* z, double* out);

// out[i] = sum_f d*d with d = x_cm[f*n + i] - z[f], f ascending.
void sqdist_batch(const double* x_cm, std::size_t n, std::size_t p,
                  const double* z, double* out);

// out[i] = a*x[i] + b
void affine(const double* x, std::size_t n, double a, double b, double* out);

// g[i] += y[i] * (ci*ki[i] + cj*kj[i])
void grad_update(double* g, const double* y, const double* ki,
                 const double* kj, double ci, double cj, std::size_t n);

}  // namespace tiltsvm::vecops
