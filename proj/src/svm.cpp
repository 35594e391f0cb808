#include "tiltsvm/svm.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/vecops.hpp"

namespace tiltsvm {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Curvature floor for near-singular working pairs.
constexpr double kTau = 1e-12;

void validate_train_config(const TrainConfig& cfg) {
  if (!std::isfinite(cfg.c) || cfg.c <= 0.0) {
    throw InvalidConfig("train: c must be > 0");
  }
  if (!std::isfinite(cfg.tol) || cfg.tol <= 0.0) {
    throw InvalidConfig("train: tol must be > 0");
  }
  if (cfg.max_passes < 1) {
    throw InvalidConfig("train: max_passes must be >= 1");
  }
}

struct SmoResult {
  std::vector<double> alpha;
  double bias = 0.0;
  bool converged = false;
};

// Dual solver over the kernel cache.  State kept per point:
//   alpha[t] in [0, c], grad[t] = dual gradient, and the violation value
//   v_t = -y_t * grad_t, which equals y_t - f_t for the current decision f.
// Optimality: max v over the up set minus min v over the low set <= tol.
SmoResult smo_solve(GramCache& cache, const std::vector<double>& y,
                    const TrainConfig& cfg) {
  const std::size_t n = cache.size();
  const double c = cfg.c;
  const std::vector<double>& diag = cache.diagonal();

  SmoResult res;
  res.alpha.assign(n, 0.0);
  std::vector<double>& alpha = res.alpha;
  std::vector<double> grad(n, -1.0);

  for (long pass = 0; pass < cfg.max_passes; ++pass) {
    double m_up = -kInf;
    double m_low = kInf;
    std::size_t i = kNone;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      const bool up = y[t] > 0.0 ? alpha[t] < c : alpha[t] > 0.0;
      const bool low = y[t] > 0.0 ? alpha[t] > 0.0 : alpha[t] < c;
      if (up && v > m_up) {
        m_up = v;
        i = t;
      }
      if (low && v < m_low) m_low = v;
    }
    if (i == kNone || m_up - m_low <= cfg.tol) {
      res.converged = true;
      break;
    }

    const double* ki = cache.row(i);
    std::size_t j = kNone;
    double best_gain = -kInf;
    for (std::size_t t = 0; t < n; ++t) {
      const bool low = y[t] > 0.0 ? alpha[t] > 0.0 : alpha[t] < c;
      if (!low) continue;
      const double v = -y[t] * grad[t];
      if (v >= m_up) continue;
      const double b = m_up - v;
      double a = diag[i] + diag[t] - 2.0 * ki[t];
      if (a <= 0.0) a = kTau;
      const double gain = b * b / a;
      if (gain > best_gain) {
        best_gain = gain;
        j = t;
      }
    }
    if (j == kNone) {
      res.converged = true;
      break;
    }

    const double vj = -y[j] * grad[j];
    double a = diag[i] + diag[j] - 2.0 * ki[j];
    if (a <= 0.0) a = kTau;
    // Step d > 0 moves beta_i up and beta_j down by d (beta_t = alpha_t y_t),
    // which keeps the equality constraint; caps keep both alphas in the box.
    const double dstar = (m_up - vj) / a;
    const double cap_i = y[i] > 0.0 ? c - alpha[i] : alpha[i];
    const double cap_j = y[j] > 0.0 ? alpha[j] : c - alpha[j];
    double d = dstar;
    if (cap_i < d) d = cap_i;
    if (cap_j < d) d = cap_j;

    const double old_i = alpha[i];
    const double old_j = alpha[j];
    if (d == cap_i) {
      alpha[i] = y[i] > 0.0 ? c : 0.0;
    } else {
      alpha[i] = old_i + (y[i] > 0.0 ? d : -d);
    }
    if (d == cap_j) {
      alpha[j] = y[j] > 0.0 ? 0.0 : c;
    } else {
      alpha[j] = old_j - (y[j] > 0.0 ? d : -d);
    }

    const double dbi = y[i] * (alpha[i] - old_i);
    const double dbj = y[j] * (alpha[j] - old_j);
    const double* kj = cache.row(j);
    vecops::grad_update(grad.data(), y.data(), ki, kj, dbi, dbj, n);
  }

  double sum = 0.0;
  std::size_t nfree = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0 && alpha[t] < c) {
      sum += -y[t] * grad[t];
      ++nfree;
    }
  }
  if (nfree > 0) {
    res.bias = sum / static_cast<double>(nfree);
  } else {
    // Every alpha is at a bound; any bias between the tightest bound-set
    // values satisfies the optimality conditions, take the midpoint.
    double lo = -kInf;
    double hi = kInf;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      const bool lower_set =
          (y[t] > 0.0 && alpha[t] == 0.0) || (y[t] < 0.0 && alpha[t] == c);
      const bool upper_set =
          (y[t] > 0.0 && alpha[t] == c) || (y[t] < 0.0 && alpha[t] == 0.0);
      if (lower_set && v > lo) lo = v;
      if (upper_set && v < hi) hi = v;
    }
    if (lo > -kInf && hi < kInf) {
      res.bias = (lo + hi) / 2.0;
    } else if (lo > -kInf) {
      res.bias = lo;
    } else if (hi < kInf) {
      res.bias = hi;
    }
  }
  return res;
}

std::vector<double> signed_labels(const Dataset& data,
                                  const std::vector<int>& y) {
  if (y.size() != data.rows()) {
    throw InvalidInput("smo_train: label count does not match rows");
  }
  bool pos = false, neg = false;
  std::vector<double> yd(y.size());
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (y[t] == 1) {
      pos = true;
      yd[t] = 1.0;
    } else if (y[t] == -1) {
      neg = true;
      yd[t] = -1.0;
    } else {
      throw InvalidInput("smo_train: labels must be +1 or -1");
    }
  }
  if (!pos || !neg) {
    throw InvalidInput("smo_train: need both classes present");
  }
  return yd;
}

SvmBinaryModel build_binary(const Dataset& data, const std::vector<double>& y,
                            const SmoResult& res, const KernelSpec& kernel,
                            double support_cutoff) {
  SvmBinaryModel model;
  model.kernel = kernel;
  model.bias = res.bias;
  model.converged = res.converged;
  const std::size_t p = data.cols();
  for (std::size_t t = 0; t < data.rows(); ++t) {
    if (res.alpha[t] > support_cutoff) {
      const double* row = data.features().data() + t * p;
      model.support_vectors.emplace_back(row, row + p);
      model.coefficients.push_back(res.alpha[t] * y[t]);
    }
  }
  return model;
}

}  // namespace

SvmBinaryModel smo_train(const Dataset& data, const std::vector<int>& y,
                         const TrainConfig& cfg, GramCache& cache) {
  validate_train_config(cfg);
  if (data.rows() == 0) throw InvalidInput("smo_train: empty dataset");
  if (cache.size() != data.rows()) {
    throw InvalidInput("smo_train: cache size does not match rows");
  }
  const std::vector<double> yd = signed_labels(data, y);
  const SmoResult res = smo_solve(cache, yd, cfg);
  return build_binary(data, yd, res, cache.spec(), cfg.tol);
}

SvmBinaryModel smo_train(const Dataset& data, const std::vector<int>& y,
                         const KernelSpec& kernel, const TrainConfig& cfg) {
  validate_kernel_spec(kernel);
  validate_train_config(cfg);
  if (data.rows() == 0) throw InvalidInput("smo_train: empty dataset");
  GramCache cache(data.features().data(), data.rows(), data.cols(), kernel);
  return smo_train(data, y, cfg, cache);
}

double decision_value(const SvmBinaryModel& model, const double* x) {
  double f = 0.0;
  for (std::size_t k = 0; k < model.support_vectors.size(); ++k) {
    const std::vector<double>& sv = model.support_vectors[k];
    f += model.coefficients[k] * kernel_eval(model.kernel, sv.data(), x,
                                             sv.size());
  }
  return f + model.bias;
}

MulticlassModel train_multiclass_std(const Dataset& std_train,
                                     const StandardizerParams& standardizer,
                                     const TrainConfig& cfg, GramCache& cache) {
  validate_train_config(cfg);
  if (std_train.rows() == 0) throw InvalidInput("train: empty dataset");
  if (standardizer.mu.size() != std_train.cols() ||
      standardizer.sigma.size() != std_train.cols()) {
    throw InvalidInput("train: standardizer width mismatch");
  }

  MulticlassModel model;
  model.kernel = cache.spec();
  model.c = cfg.c;
  model.classes = std_train.distinct_labels();
  if (model.classes.size() < 2) {
    throw InvalidInput("train: need at least two distinct labels");
  }
  model.standardizer = standardizer;

  std::vector<int> y(std_train.rows());
  for (int cls : model.classes) {
    for (std::size_t t = 0; t < std_train.rows(); ++t) {
      y[t] = std_train.labels()[t] == cls ? 1 : -1;
    }
    SvmBinaryModel bin = smo_train(std_train, y, cfg, cache);
    bin.positive_label = cls;
    bin.negative_label = -1;  // one-vs-rest sentinel
    model.binaries.push_back(std::move(bin));
  }
  return model;
}

MulticlassModel train_multiclass(const Dataset& train, const KernelSpec& kernel,
                                 const TrainConfig& cfg) {
  validate_kernel_spec(kernel);
  validate_train_config(cfg);
  if (train.rows() == 0) throw InvalidInput("train: empty dataset");

  const StandardizerParams standardizer = fit_standardizer(train);
  const Dataset std_train = transform(train, standardizer);
  GramCache cache(std_train.features().data(), std_train.rows(),
                  std_train.cols(), kernel);
  return train_multiclass_std(std_train, standardizer, cfg, cache);
}

int predict(const MulticlassModel& model, const double* x_raw) {
  if (model.binaries.empty()) throw InvalidInput("predict: empty model");
  const std::size_t p = model.standardizer.mu.size();
  std::vector<double> xs(p);
  transform_row(x_raw, model.standardizer, xs.data());
  int best_label = model.binaries.front().positive_label;
  double best = -kInf;
  for (const SvmBinaryModel& bin : model.binaries) {
    const double f = decision_value(bin, xs.data());
    if (f > best) {
      best = f;
      best_label = bin.positive_label;
    }
  }
  return best_label;
}

std::vector<int> predict_all(const MulticlassModel& model, const Dataset& raw) {
  const ModelEvaluator ev(model);
  return ev.predict_all(raw);
}

ModelEvaluator::ModelEvaluator(const MulticlassModel& model)
    : model_(&model), p_(model.standardizer.mu.size()) {
  if (model.binaries.empty()) throw InvalidInput("evaluator: empty model");
  if (p_ == 0 || model.standardizer.sigma.size() != p_) {
    throw InvalidInput("evaluator: bad standardizer");
  }
  std::size_t max_sv = 1;
  for (const SvmBinaryModel& bin : model.binaries) {
    const std::size_t n_sv = bin.support_vectors.size();
    if (bin.coefficients.size() != n_sv) {
      throw InvalidInput("evaluator: coefficient count mismatch");
    }
    std::vector<double> cm(n_sv * p_);
    for (std::size_t k = 0; k < n_sv; ++k) {
      if (bin.support_vectors[k].size() != p_) {
        throw InvalidInput("evaluator: support vector width mismatch");
      }
      for (std::size_t f = 0; f < p_; ++f) {
        cm[f * n_sv + k] = bin.support_vectors[k][f];
      }
    }
    sv_cm_.push_back(std::move(cm));
    if (n_sv > max_sv) max_sv = n_sv;
  }
  xbuf_.resize(p_);
  kbuf_.resize(max_sv);
}

double ModelEvaluator::decision(std::size_t binary_index,
                                const double* x_std) const {
  const SvmBinaryModel& bin = model_->binaries[binary_index];
  const std::size_t n_sv = bin.support_vectors.size();
  kernel_batch(bin.kernel, sv_cm_[binary_index].data(), n_sv, p_, x_std,
               kbuf_.data());
  double f = 0.0;
  for (std::size_t k = 0; k < n_sv; ++k) f += bin.coefficients[k] * kbuf_[k];
  return f + bin.bias;
}

int ModelEvaluator::predict(const double* x_raw) const {
  transform_row(x_raw, model_->standardizer, xbuf_.data());
  int best_label = model_->binaries.front().positive_label;
  double best = -kInf;
  for (std::size_t b = 0; b < model_->binaries.size(); ++b) {
    const double f = decision(b, xbuf_.data());
    if (f > best) {
      best = f;
      best_label = model_->binaries[b].positive_label;
    }
  }
  return best_label;
}

std::vector<int> ModelEvaluator::predict_all(const Dataset& raw) const {
  if (raw.cols() != p_) throw InvalidInput("predict: feature width mismatch");
  std::vector<int> out(raw.rows());
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    out[i] = predict(raw.features().data() + i * p_);
  }
  return out;
}

}  // namespace tiltsvm
