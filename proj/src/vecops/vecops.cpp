#include "tiltsvm/vecops.hpp"

#include <atomic>

#include "vecops_impl.hpp"

namespace tiltsvm::vecops {

namespace {

using detail::OpsTable;

struct BackendEntry {
  Backend id;
  const OpsTable* ops;
};

BackendEntry detect() {
#if defined(TILTSVM_HAVE_AVX2)
  if (detail::avx2_supported()) return {Backend::avx2, &detail::avx2_ops};
#endif
#if defined(TILTSVM_HAVE_NEON)
  return {Backend::neon, &detail::neon_ops};
#endif
  return {Backend::scalar, &detail::scalar_ops};
}

std::atomic<const OpsTable*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const OpsTable* ops() {
  const OpsTable* t = g_ops.load(std::memory_order_acquire);
  if (t == nullptr) {
    const BackendEntry e = detect();
    g_backend.store(e.id, std::memory_order_relaxed);
    g_ops.store(e.ops, std::memory_order_release);
    t = e.ops;
  }
  return t;
}

const OpsTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_ops;
    case Backend::avx2:
#if defined(TILTSVM_HAVE_AVX2)
      if (detail::avx2_supported()) return &detail::avx2_ops;
#endif
      return nullptr;
    case Backend::neon:
#if defined(TILTSVM_HAVE_NEON)
      return &detail::neon_ops;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

Backend active_backend() {
  ops();
  return g_backend.load(std::memory_order_relaxed);
}

bool force_backend(Backend b) {
  const OpsTable* t = table_for(b);
  if (t == nullptr) return false;
  g_backend.store(b, std::memory_order_relaxed);
  g_ops.store(t, std::memory_order_release);
  return true;
}

void reset_backend() {
  const BackendEntry e = detect();
  g_backend.store(e.id, std::memory_order_relaxed);
  g_ops.store(e.ops, std::memory_order_release);
}

double dot(const double* a, const double* b, std::size_t n) {
  return ops()->dot(a, b, n);
}

void dot_batch(const double* x_cm, std::size_t n, std::size_t p,
               const double* z, double* out) {
  ops()->dot_batch(x_cm, n, p, z, out);
}

void sqdist_batch(const double* x_cm, std::size_t n, std::size_t p,
                  const double* z, double* out) {
  ops()->sqdist_batch(x_cm, n, p, z, out);
}

void affine(const double* x, std::size_t n, double a, double b, double* out) {
  ops()->affine(x, n, a, b, out);
}

void grad_update(double* g, const double* y, const double* ki,
                 const double* kj, double ci, double cj, std::size_t n) {
  ops()->grad_update(g, y, ki, kj, ci, cj, n);
}

}  // namespace tiltsvm::vecops
