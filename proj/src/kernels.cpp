#include "tiltsvm/kernels.hpp"

#include <cmath>
#include <limits>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/vecops.hpp"

namespace tiltsvm {

namespace {

// base^e by repeated multiplication, e >= 1.  Deliberately not pow(): the
// result must match the batched path, multiplication for multiplication.
double powi(double base, int e) {
  double r = base;
  for (int k = 1; k < e; ++k) r *= base;
  return r;
}

}  // namespace

std::string_view kernel_family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::linear:
      return "linear";
    case KernelFamily::poly:
      return "poly";
    case KernelFamily::rbf:
      return "rbf";
  }
  throw InvalidInput("unknown kernel family");
}

KernelFamily kernel_family_from_name(std::string_view name) {
  if (name == "linear") return KernelFamily::linear;
  if (name == "poly") return KernelFamily::poly;
  if (name == "rbf") return KernelFamily::rbf;
  throw InvalidInput("unknown kernel family '" + std::string(name) + "'");
}

void validate_kernel_spec(const KernelSpec& spec) {
  kernel_family_name(spec.family);
  if (!std::isfinite(spec.gamma) || !std::isfinite(spec.coef0)) {
    throw InvalidConfig("kernel: gamma and coef0 must be finite");
  }
  if (spec.degree < 1) throw InvalidConfig("kernel: degree must be >= 1");
  if ((spec.family == KernelFamily::poly || spec.family == KernelFamily::rbf) &&
      spec.gamma <= 0.0) {
    throw InvalidConfig("kernel: gamma must be > 0");
  }
}

double kernel_eval(const KernelSpec& spec, const double* x, const double* z,
                   std::size_t p) {
  switch (spec.family) {
    case KernelFamily::linear: {
      double acc = 0.0;
      for (std::size_t f = 0; f < p; ++f) acc += x[f] * z[f];
      return acc;
    }
    case KernelFamily::poly: {
      double acc = 0.0;
      for (std::size_t f = 0; f < p; ++f) acc += x[f] * z[f];
      return powi(spec.gamma * acc + spec.coef0, spec.degree);
    }
    case KernelFamily::rbf: {
      double acc = 0.0;
      for (std::size_t f = 0; f < p; ++f) {
        const double d = x[f] - z[f];
        acc += d * d;
      }
      return std::exp(-spec.gamma * acc);
    }
  }
  throw InvalidInput("unknown kernel family");
}

void kernel_batch(const KernelSpec& spec, const double* x_cm, std::size_t n,
                  std::size_t p, const double* z, double* out) {
  switch (spec.family) {
    case KernelFamily::linear:
      vecops::dot_batch(x_cm, n, p, z, out);
      return;
    case KernelFamily::poly:
      vecops::dot_batch(x_cm, n, p, z, out);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = powi(spec.gamma * out[i] + spec.coef0, spec.degree);
      }
      return;
    case KernelFamily::rbf:
      vecops::sqdist_batch(x_cm, n, p, z, out);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(-spec.gamma * out[i]);
      }
      return;
  }
  throw InvalidInput("unknown kernel family");
}

std::vector<double> gram_matrix(const KernelSpec& spec, const double* x_rm,
                                std::size_t n, std::size_t p) {
  validate_kernel_spec(spec);
  std::vector<double> x_cm(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < p; ++f) x_cm[f * n + i] = x_rm[i * p + f];
  }
  std::vector<double> gram(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    kernel_batch(spec, x_cm.data(), n, p, x_rm + i * p, gram.data() + i * n);
  }
  return gram;
}

GramCache::GramCache(const double* x_rm, std::size_t n, std::size_t p,
                     const KernelSpec& spec, std::size_t max_cached_rows)
    : spec_(spec),
      n_(n),
      p_(p),
      full_(n <= max_cached_rows),
      x_rm_(x_rm, x_rm + n * p),
      x_cm_(n * p),
      diag_(n) {
  if (n == 0 || p == 0) throw InvalidInput("gram cache: empty matrix");
  validate_kernel_spec(spec);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  loaded_[0] = loaded_[1] = kNone;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < p; ++f) x_cm_[f * n + i] = x_rm[i * p + f];
  }
  for (std::size_t i = 0; i < n; ++i) {
    diag_[i] = kernel_eval(spec_, x_rm + i * p, x_rm + i * p, p);
  }
  if (full_) {
    cache_.resize(n * n);
    ready_.assign(n, 0);
  } else {
    cache_.resize(2 * n);
  }
}

const double* GramCache::row(std::size_t i) {
  if (i >= n_) throw InvalidInput("gram cache: row out of range");
  if (full_) {
    double* dst = cache_.data() + i * n_;
    if (!ready_[i]) {
      kernel_batch(spec_, x_cm_.data(), n_, p_, x_rm_.data() + i * p_, dst);
      ready_[i] = 1;
    }
    return dst;
  }
  for (int s = 0; s < 2; ++s) {
    if (loaded_[s] == i) {
      next_evict_ = 1 - s;
      return cache_.data() + static_cast<std::size_t>(s) * n_;
    }
  }
  const int s = next_evict_;
  double* dst = cache_.data() + static_cast<std::size_t>(s) * n_;
  kernel_batch(spec_, x_cm_.data(), n_, p_, x_rm_.data() + i * p_, dst);
  loaded_[s] = i;
  next_evict_ = 1 - s;
  return dst;
}

}  // namespace tiltsvm
