#include "tiltsvm/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/rng.hpp"

namespace tiltsvm {

StandardizerParams fit_standardizer(const Dataset& data) {
  const std::size_t n = data.rows();
  const std::size_t p = data.cols();
  if (n == 0) throw InvalidInput("fit_standardizer: empty dataset");

  StandardizerParams params;
  params.mu.resize(p);
  params.sigma.resize(p);
  const double* x = data.features().data();
  for (std::size_t f = 0; f < p; ++f) {
    // A constant column must come out with sigma exactly 0, which the
    // two-pass formula does not guarantee in floating point.
    bool all_equal = true;
    const double first = x[f];
    for (std::size_t i = 1; i < n && all_equal; ++i) {
      all_equal = x[i * p + f] == first;
    }
    if (all_equal) {
      params.mu[f] = first;
      params.sigma[f] = 0.0;
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += x[i * p + f];
    const double mu = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = x[i * p + f] - mu;
      ss += d * d;
    }
    params.mu[f] = mu;
    params.sigma[f] = std::sqrt(ss / static_cast<double>(n));
  }
  return params;
}

void transform_row(const double* x, const StandardizerParams& params,
                   double* out) {
  const std::size_t p = params.mu.size();
  for (std::size_t f = 0; f < p; ++f) {
    out[f] =
        params.sigma[f] == 0.0 ? 0.0 : (x[f] - params.mu[f]) / params.sigma[f];
  }
}

Dataset transform(const Dataset& data, const StandardizerParams& params) {
  const std::size_t p = data.cols();
  if (params.mu.size() != p || params.sigma.size() != p) {
    throw InvalidInput("transform: standardizer width mismatch");
  }
  std::vector<double> feats = data.features();
  for (std::size_t i = 0; i < data.rows(); ++i) {
    transform_row(feats.data() + i * p, params, feats.data() + i * p);
  }
  return Dataset(std::move(feats), p, data.labels(), data.column_names());
}

SplitResult stratified_split(const Dataset& data, const SplitConfig& cfg) {
  const std::size_t n = data.rows();
  if (n == 0) throw InvalidInput("stratified_split: empty dataset");
  if (!std::isfinite(cfg.test_fraction) || cfg.test_fraction < 0.0 ||
      cfg.test_fraction > 1.0) {
    throw InvalidInput("stratified_split: test_fraction must lie in [0, 1]");
  }
  const std::int64_t t_total =
      std::llround(static_cast<double>(n) * cfg.test_fraction);

  const std::vector<int> classes = data.distinct_labels();
  const std::size_t k = classes.size();
  std::vector<std::vector<std::size_t>> buckets(k);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = data.labels()[i];
    const std::size_t c = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), label) -
        classes.begin());
    buckets[c].push_back(i);
  }

  // Largest-remainder quotas: floor(T * n_c / N) each, then one extra to the
  // classes with the biggest remainders (ties to the smaller class id).
  std::vector<std::int64_t> quota(k);
  std::vector<std::int64_t> rem(k);
  std::int64_t assigned = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const std::int64_t num =
        t_total * static_cast<std::int64_t>(buckets[c].size());
    quota[c] = num / static_cast<std::int64_t>(n);
    rem[c] = num % static_cast<std::int64_t>(n);
    assigned += quota[c];
  }
  std::vector<std::size_t> order(k);
  for (std::size_t c = 0; c < k; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rem[a] != rem[b]) return rem[a] > rem[b];
    return a < b;
  });
  for (std::size_t r = 0; assigned < t_total; ++r) {
    ++quota[order[r]];
    ++assigned;
  }

  std::vector<char> in_test(n, 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> rows = buckets[c];
    rng::shuffle(rows, cfg.seed, rng::kStreamSplitBase + c);
    for (std::int64_t j = 0; j < quota[c]; ++j) in_test[rows[j]] = 1;
  }

  std::vector<std::size_t> train_rows, test_rows;
  train_rows.reserve(n - static_cast<std::size_t>(t_total));
  test_rows.reserve(static_cast<std::size_t>(t_total));
  for (std::size_t i = 0; i < n; ++i) {
    (in_test[i] ? test_rows : train_rows).push_back(i);
  }
  return {data.select_rows(train_rows), data.select_rows(test_rows)};
}

}  // namespace tiltsvm
