#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "tiltsvm/dataset.hpp"
#include "tiltsvm/kernels.hpp"
#include "tiltsvm/preprocess.hpp"

namespace tiltsvm {

struct TrainConfig {
  double c = 1.0;
  double tol = 1e-3;
  // Cap on working-pair updates before the solver gives up on this binary
  // problem and returns the current iterate with converged = false.
  long max_passes = 1'000'000;
  std::uint64_t seed = 0;  // reserved; pair selection is deterministic
};

// One-vs-rest binary classifier in standardized feature space.
// coefficients[k] = alpha_k * y_k for the k-th support vector, so the decision
// value is sum_k coefficients[k] * K(sv_k, x) + bias.
struct SvmBinaryModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coefficients;
  double bias = 0.0;
  KernelSpec kernel;
  int positive_label = 1;
  int negative_label = -1;
  bool converged = false;
};

// Solves the soft-margin dual for labels y in {+1, -1} by sequential minimal
// optimization: most-violating first index, second-order second index, exact
// two-variable line search, stop when the duality-gap bound m - M drops to
// tol.  Rows of data must already be standardized; support vectors with
// alpha > tol are copied into the model.
SvmBinaryModel smo_train(const Dataset& data, const std::vector<int>& y,
                         const KernelSpec& kernel, const TrainConfig& cfg);

// Same, sharing a prebuilt kernel cache over the identical row set.
SvmBinaryModel smo_train(const Dataset& data, const std::vector<int>& y,
                         const TrainConfig& cfg, GramCache& cache);

// Decision value for a standardized input row of model dimensionality.
double decision_value(const SvmBinaryModel& model, const double* x);

struct MulticlassModel {
  KernelSpec kernel;
  double c = 1.0;
  std::vector<int> classes;               // ascending
  std::vector<SvmBinaryModel> binaries;   // one per class, same order
  StandardizerParams standardizer;        // fitted on the training split
};

// Fits the standardizer, then one one-vs-rest binary per distinct label over
// a kernel cache shared between them.  Needs at least two distinct labels.
MulticlassModel train_multiclass(const Dataset& train, const KernelSpec& kernel,
                                 const TrainConfig& cfg);

// Same solve on rows that are already standardized, through a caller-owned
// cache built over those rows; standardizer is stored in the model untouched.
// Lets a sweep over solver settings reuse one kernel cache.
MulticlassModel train_multiclass_std(const Dataset& std_train,
                                     const StandardizerParams& standardizer,
                                     const TrainConfig& cfg, GramCache& cache);

// Argmax of the one-vs-rest decision values; ties go to the smaller label.
// Input is a raw (unstandardized) row of model dimensionality.
int predict(const MulticlassModel& model, const double* x_raw);

std::vector<int> predict_all(const MulticlassModel& model, const Dataset& raw);

// Batch evaluator over a fixed model: flattens each binary's support vectors
// once so repeated predictions run through the batched kernel path.  Produces
// bit-identical decisions to decision_value().
class ModelEvaluator {
 public:
  explicit ModelEvaluator(const MulticlassModel& model);

  int predict(const double* x_raw) const;
  std::vector<int> predict_all(const Dataset& raw) const;
  double decision(std::size_t binary_index, const double* x_std) const;

 private:
  const MulticlassModel* model_;
  std::size_t p_;
  std::vector<std::vector<double>> sv_cm_;  // per binary, n_sv x p column-major
  mutable std::vector<double> xbuf_;
  mutable std::vector<double> kbuf_;
};

void save_model(const MulticlassModel& model, const std::filesystem::path& path);
MulticlassModel load_model(const std::filesystem::path& path);

}  // namespace tiltsvm
