#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tiltsvm/dataset.hpp"
#include "tiltsvm/svm.hpp"

namespace tiltsvm {

// Fraction of matching entries; throws InvalidInput on empty or mismatched
// inputs.
double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& actual);

// Fraction of rows the model labels correctly.
double accuracy(const MulticlassModel& model, const Dataset& data);

enum class SweepAxis { c, gamma, degree };

std::string_view sweep_axis_name(SweepAxis axis);
SweepAxis sweep_axis_from_name(std::string_view name);
std::vector<double> default_axis_values(SweepAxis axis);

struct SweepConfig {
  SweepAxis axis = SweepAxis::c;
  // Grid for the swept parameter; must be strictly ascending and positive.
  // Empty means default_axis_values(axis).
  std::vector<double> values;
  // Base settings; the swept parameter overrides the matching field point by
  // point, everything else is held fixed.
  KernelSpec kernel;
  TrainConfig train;
};

struct CurvePoint {
  double value = 0.0;
  double train_accuracy = 0.0;
  double validation_accuracy = 0.0;
  bool converged = false;  // every one-vs-rest binary hit tolerance
  bool ok = false;         // training and evaluation completed
  std::string error;       // diagnostic when !ok
};

struct ValidationCurve {
  std::string param_name;
  KernelSpec kernel;  // fixed-parameter snapshot
  TrainConfig train;
  std::vector<CurvePoint> points;
};

// Trains one model per grid value and scores it on both splits.  A point
// whose training throws is recorded as failed and the sweep moves on; the
// curve is usable as long as one point survives.
ValidationCurve validation_curve(const Dataset& train,
                                 const Dataset& validation,
                                 const SweepConfig& cfg);

// underfit_region / overfit_region are the maximal prefix and suffix of the
// grid whose validation accuracy stays below best - 0.01 (failed points count
// as below): the clearly-worse ends of the curve.
struct SelectionResult {
  double best_value = 0.0;
  double best_validation_accuracy = 0.0;
  std::vector<double> underfit_region;
  std::vector<double> overfit_region;
};

// Best successful point by validation accuracy, ties toward the smaller
// parameter value.  Throws NoResult when every point failed.
SelectionResult select_optimal(const ValidationCurve& curve);

std::string curve_to_csv(const ValidationCurve& curve);
void write_curve_csv(const ValidationCurve& curve,
                     const std::filesystem::path& path);

}  // namespace tiltsvm
