#include "tiltsvm/model_selection.hpp"

#include <cmath>
#include <exception>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/preprocess.hpp"
#include "tiltsvm/util.hpp"

namespace tiltsvm {

double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& actual) {
  if (predicted.empty() || predicted.size() != actual.size()) {
    throw InvalidInput("accuracy: need equal nonzero prediction/label counts");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == actual[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

double accuracy(const MulticlassModel& model, const Dataset& data) {
  if (data.rows() == 0) throw InvalidInput("accuracy: empty dataset");
  return accuracy(predict_all(model, data), data.labels());
}

std::string_view sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::c:
      return "c";
    case SweepAxis::gamma:
      return "gamma";
    case SweepAxis::degree:
      return "degree";
  }
  throw InvalidInput("unknown sweep axis");
}

SweepAxis sweep_axis_from_name(std::string_view name) {
  if (name == "c") return SweepAxis::c;
  if (name == "gamma") return SweepAxis::gamma;
  if (name == "degree") return SweepAxis::degree;
  throw InvalidInput("unknown sweep axis '" + std::string(name) + "'");
}

std::vector<double> default_axis_values(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::c:
      return {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1000.0, 10000.0};
    case SweepAxis::gamma:
      return {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0};
    case SweepAxis::degree:
      return {1.0, 2.0, 3.0, 4.0, 5.0};
  }
  throw InvalidInput("unknown sweep axis");
}

namespace {

void score_point(const MulticlassModel& model, const Dataset& train,
                 const Dataset& validation, CurvePoint& pt) {
  const ModelEvaluator ev(model);
  pt.train_accuracy = accuracy(ev.predict_all(train), train.labels());
  pt.validation_accuracy =
      accuracy(ev.predict_all(validation), validation.labels());
  pt.converged = true;
  for (const SvmBinaryModel& bin : model.binaries) {
    pt.converged = pt.converged && bin.converged;
  }
  pt.ok = true;
}

}  // namespace

ValidationCurve validation_curve(const Dataset& train,
                                 const Dataset& validation,
                                 const SweepConfig& cfg) {
  if (train.rows() == 0 || validation.rows() == 0) {
    throw InvalidInput("sweep: empty split");
  }
  if (train.cols() != validation.cols()) {
    throw InvalidInput("sweep: feature width mismatch between splits");
  }
  const std::vector<double> values =
      cfg.values.empty() ? default_axis_values(cfg.axis) : cfg.values;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k]) || values[k] <= 0.0) {
      throw InvalidInput("sweep: grid values must be positive");
    }
    if (k > 0 && values[k] <= values[k - 1]) {
      throw InvalidInput("sweep: grid must be strictly ascending");
    }
  }

  ValidationCurve curve;
  curve.param_name = sweep_axis_name(cfg.axis);
  curve.kernel = cfg.kernel;
  curve.train = cfg.train;
  curve.points.reserve(values.size());

  if (cfg.axis == SweepAxis::c) {
    // The kernel never changes along this axis, so every point shares one
    // standardizer and one kernel cache.
    validate_kernel_spec(cfg.kernel);
    const StandardizerParams standardizer = fit_standardizer(train);
    const Dataset std_train = transform(train, standardizer);
    GramCache cache(std_train.features().data(), std_train.rows(),
                    std_train.cols(), cfg.kernel);
    for (double v : values) {
      CurvePoint pt;
      pt.value = v;
      try {
        TrainConfig tc = cfg.train;
        tc.c = v;
        const MulticlassModel model =
            train_multiclass_std(std_train, standardizer, tc, cache);
        score_point(model, train, validation, pt);
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
      curve.points.push_back(std::move(pt));
    }
    return curve;
  }

  for (double v : values) {
    CurvePoint pt;
    pt.value = v;
    try {
      KernelSpec spec = cfg.kernel;
      if (cfg.axis == SweepAxis::gamma) {
        spec.gamma = v;
      } else {
        if (v != std::floor(v)) {
          throw InvalidConfig("sweep: degree values must be integers");
        }
        spec.degree = static_cast<int>(v);
      }
      const MulticlassModel model = train_multiclass(train, spec, cfg.train);
      score_point(model, train, validation, pt);
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

SelectionResult select_optimal(const ValidationCurve& curve) {
  const std::size_t n = curve.points.size();
  std::size_t best = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (!curve.points[k].ok) continue;
    if (best == n || curve.points[k].validation_accuracy >
                         curve.points[best].validation_accuracy) {
      best = k;
    }
  }
  if (best == n) throw NoResult("sweep: every grid point failed");

  SelectionResult res;
  res.best_value = curve.points[best].value;
  res.best_validation_accuracy = curve.points[best].validation_accuracy;
  const double cut = res.best_validation_accuracy - 0.01;
  const auto below = [&](const CurvePoint& pt) {
    return !pt.ok || pt.validation_accuracy < cut;
  };
  for (const CurvePoint& pt : curve.points) {
    if (!below(pt)) break;
    res.underfit_region.push_back(pt.value);
  }
  std::size_t tail = n;
  while (tail > 0 && below(curve.points[tail - 1])) --tail;
  for (std::size_t k = tail; k < n; ++k) {
    res.overfit_region.push_back(curve.points[k].value);
  }
  return res;
}

std::string curve_to_csv(const ValidationCurve& curve) {
  std::string out =
      "param_name,param_value,train_accuracy,validation_accuracy,converged\n";
  for (const CurvePoint& pt : curve.points) {
    out += curve.param_name;
    out += ',';
    out += format_g17(pt.value);
    out += ',';
    out += pt.ok ? format_g6(pt.train_accuracy) : "nan";
    out += ',';
    out += pt.ok ? format_g6(pt.validation_accuracy) : "nan";
    out += ',';
    out += pt.converged ? "true" : "false";
    out += '\n';
  }
  return out;
}

void write_curve_csv(const ValidationCurve& curve,
                     const std::filesystem::path& path) {
  atomic_write_file(path, curve_to_csv(curve));
}

}  // namespace tiltsvm
