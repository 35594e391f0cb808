#pragma once

#include <cstdint>
#include <vector>

#include "tiltsvm/dataset.hpp"

namespace tiltsvm {

// Per-column affine transform x -> (x - mu) / sigma fitted on training data.
// sigma is the population standard deviation (divide by N). A constant column
// gets sigma == 0 and transforms to all zeros instead of dividing by zero.
struct StandardizerParams {
  std::vector<double> mu;
  std::vector<double> sigma;
};

StandardizerParams fit_standardizer(const Dataset& data);

Dataset transform(const Dataset& data, const StandardizerParams& params);

// Single row, length params.mu.size(); out may alias x.
void transform_row(const double* x, const StandardizerParams& params,
                   double* out);

struct SplitConfig {
  double test_fraction = 0.3;
  std::uint64_t seed = 0;
};

struct SplitResult {
  Dataset train;
  Dataset test;
};

// Stratified split. The total test size is round(N * test_fraction); per-class
// quotas follow largest remainder so class proportions carry over as closely
// as integers allow. Row order within each part preserves the original order.
SplitResult stratified_split(const Dataset& data, const SplitConfig& cfg);

}  // namespace tiltsvm
