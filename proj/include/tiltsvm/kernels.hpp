#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tiltsvm {

enum class KernelFamily { linear, poly, rbf };

// linear:  K(x, z) = <x, z>
// poly:    K(x, z) = (gamma * <x, z> + coef0)^degree
// rbf:     K(x, z) = exp(-gamma * |x - z|^2)
// gamma, degree and coef0 are ignored by families that do not use them but are
// always carried (they round-trip through saved models).
struct KernelSpec {
  KernelFamily family = KernelFamily::linear;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 1.0;
};

std::string_view kernel_family_name(KernelFamily family);
KernelFamily kernel_family_from_name(std::string_view name);

// Throws InvalidConfig on non-finite parameters, gamma <= 0 for poly/rbf,
// or degree < 1.
void validate_kernel_spec(const KernelSpec& spec);

// Single pair.  The arithmetic is a plain ascending-feature loop; kernel_batch
// reproduces it bit for bit, so cached and uncached evaluations never drift.
double kernel_eval(const KernelSpec& spec, const double* x, const double* z,
                   std::size_t p);

// out[i] = K(row i of x, z) for an n x p matrix stored column-major
// (x_cm[f * n + i] is feature f of row i).
void kernel_batch(const KernelSpec& spec, const double* x_cm, std::size_t n,
                  std::size_t p, const double* z, double* out);

// Full n x n matrix of K(x_i, x_j), row-major, from a row-major data matrix.
std::vector<double> gram_matrix(const KernelSpec& spec, const double* x_rm,
                                std::size_t n, std::size_t p);

// Lazily filled kernel matrix over a fixed training set.  Up to
// max_cached_rows rows the whole matrix is kept (one contiguous n x n block,
// rows computed on first touch); past that only the two most recently fetched
// rows survive, so in that regime a row() pointer dies with the second
// following call.  Two live rows is exactly what the solver's working pair
// needs.
//
// The cache never sees labels, which is what lets one instance serve every
// one-vs-rest subproblem on the same training matrix.
class GramCache {
 public:
  static constexpr std::size_t kDefaultMaxCachedRows = 20000;

  GramCache(const double* x_rm, std::size_t n, std::size_t p,
            const KernelSpec& spec,
            std::size_t max_cached_rows = kDefaultMaxCachedRows);

  std::size_t size() const { return n_; }
  const double* row(std::size_t i);
  const std::vector<double>& diagonal() const { return diag_; }
  const KernelSpec& spec() const { return spec_; }

 private:
  KernelSpec spec_;
  std::size_t n_;
  std::size_t p_;
  bool full_;
  std::vector<double> x_rm_;
  std::vector<double> x_cm_;
  std::vector<double> diag_;
  std::vector<double> cache_;
  std::vector<char> ready_;
  std::size_t loaded_[2];
  int next_evict_ = 0;
};

}  // namespace tiltsvm
