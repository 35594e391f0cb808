#pragma once

#include <cstddef>

// Per-backend entry points.  Signatures mirror the public API in vecops.hpp;
// the dispatch table in vecops.cpp binds one set of them.

namespace tiltsvm::vecops::detail {

struct OpsTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*dot_batch)(const double*, std::size_t, std::size_t, const double*,
                    double*);
  void (*sqdist_batch)(const double*, std::size_t, std::size_t, const double*,
                       double*);
  void (*affine)(const double*, std::size_t, double, double, double*);
  void (*grad_update)(double*, const double*, const double*, const double*,
                      double, double, std::size_t);
};

extern const OpsTable scalar_ops;

#if defined(TILTSVM_HAVE_AVX2)
extern const OpsTable avx2_ops;
bool avx2_supported();
#endif

#if defined(TILTSVM_HAVE_NEON)
extern const OpsTable neon_ops;
#endif

}  // namespace tiltsvm::vecops::detail
