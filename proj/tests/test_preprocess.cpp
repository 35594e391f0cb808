#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "tiltsvm/errors.hpp"
#include "tiltsvm/preprocess.hpp"

using namespace tiltsvm;

namespace {

// One feature column holding the original row index, so split membership and
// ordering are directly observable.
Dataset indexed_dataset(const std::vector<int>& class_sizes) {
  std::vector<double> feats;
  std::vector<int> labels;
  int row = 0;
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    for (int s = 0; s < class_sizes[c]; ++s, ++row) {
      feats.push_back(row);
      labels.push_back(static_cast<int>(c));
    }
  }
  return Dataset(std::move(feats), 1, std::move(labels), {"i"});
}

std::map<int, int> label_counts(const Dataset& d) {
  std::map<int, int> counts;
  for (int label : d.labels()) ++counts[label];
  return counts;
}

}  // namespace

TEST_CASE("standardizer moments") {
  const Dataset d = testutil::make_blobs(50, 4, 3, 17);
  const StandardizerParams params = fit_standardizer(d);
  REQUIRE(params.mu.size() == 4);

  // Reference moments straight from the definition.
  const std::size_t n = d.rows();
  for (std::size_t f = 0; f < 4; ++f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += d.at(i, f);
    const double mu = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ss += (d.at(i, f) - mu) * (d.at(i, f) - mu);
    }
    CHECK(params.mu[f] == doctest::Approx(mu).epsilon(1e-15));
    CHECK(params.sigma[f] ==
          doctest::Approx(std::sqrt(ss / static_cast<double>(n)))
              .epsilon(1e-15));
  }

  const Dataset t = transform(d, params);
  for (std::size_t f = 0; f < 4; ++f) {
    double sum = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += t.at(i, f);
    const double mean = sum / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      ss += (t.at(i, f) - mean) * (t.at(i, f) - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n));
    CHECK(std::abs(mean) <= 1e-9);
    CHECK(std::abs(sd - 1.0) <= 1e-9);
  }
}

TEST_CASE("constant columns come out exactly zero") {
  // Huge magnitudes would leave the naive two-pass sum with rounding residue;
  // the all-equal short circuit must yield sigma == 0 regardless.
  const Dataset d({1e17, 2.0, 1e17, 3.0, 1e17, 5.0}, 2, {0, 0, 1},
                  {"const", "var"});
  const StandardizerParams params = fit_standardizer(d);
  CHECK(params.sigma[0] == 0.0);
  CHECK(params.mu[0] == 1e17);
  CHECK(params.sigma[1] > 0.0);

  const Dataset t = transform(d, params);
  for (std::size_t i = 0; i < 3; ++i) CHECK(t.at(i, 0) == 0.0);

  double buf[2] = {-4.0, 2.0};
  transform_row(buf, params, buf);  // aliasing allowed
  CHECK(buf[0] == 0.0);
  CHECK(buf[1] == (2.0 - params.mu[1]) / params.sigma[1]);
}

TEST_CASE("standardizer rejects bad input") {
  CHECK_THROWS_AS(fit_standardizer(Dataset()), InvalidInput);
  const Dataset d = testutil::make_blobs(5, 3, 2, 1);
  StandardizerParams narrow;
  narrow.mu = {0.0};
  narrow.sigma = {1.0};
  CHECK_THROWS_AS(transform(d, narrow), InvalidInput);
}

TEST_CASE("split matches the reference size 2893/6749") {
  std::vector<int> sizes;
  for (int c = 0; c < 9; ++c) sizes.push_back(742);
  for (int c = 0; c < 4; ++c) sizes.push_back(741);
  const Dataset d = indexed_dataset(sizes);
  REQUIRE(d.rows() == 9642);

  SplitConfig cfg;
  cfg.test_fraction = 0.3;
  cfg.seed = 5;
  const SplitResult split = stratified_split(d, cfg);
  CHECK(split.test.rows() == 2893);
  CHECK(split.train.rows() == 6749);

  const auto counts = label_counts(split.test);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const double proportional =
        2893.0 * static_cast<double>(sizes[c]) / 9642.0;
    CHECK(std::abs(counts.at(static_cast<int>(c)) - proportional) <= 1.0);
  }
  // Largest remainder hands the 7 leftover slots to the lowest-id 742 classes.
  for (int c = 0; c < 13; ++c) CHECK(counts.at(c) == (c < 7 ? 223 : 222));
}

TEST_CASE("split is a partition preserving row order") {
  const Dataset d = indexed_dataset({11, 7, 25, 3});
  SplitConfig cfg;
  cfg.test_fraction = 0.4;
  cfg.seed = 12;
  const SplitResult split = stratified_split(d, cfg);
  CHECK(split.train.rows() + split.test.rows() == d.rows());

  std::vector<double> seen;
  for (const Dataset* part : {&split.train, &split.test}) {
    double prev = -1.0;
    for (std::size_t i = 0; i < part->rows(); ++i) {
      const double v = part->at(i, 0);
      CHECK(v > prev);  // original order within each part
      prev = v;
      seen.push_back(v);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(seen[i] == static_cast<double>(i));  // disjoint union of all rows
  }
}

TEST_CASE("largest remainder on a hand-computed example") {
  // N=10, sizes {3,3,4}, fraction 0.25 -> T = 3; floors are {0,0,1} with
  // remainders {9,9,2}, so classes 0 and 1 get the two leftover slots.
  const Dataset d = indexed_dataset({3, 3, 4});
  SplitConfig cfg;
  cfg.test_fraction = 0.25;
  cfg.seed = 3;
  const SplitResult split = stratified_split(d, cfg);
  CHECK(split.test.rows() == 3);
  const auto counts = label_counts(split.test);
  CHECK(counts.at(0) == 1);
  CHECK(counts.at(1) == 1);
  CHECK(counts.at(2) == 1);
}

TEST_CASE("split determinism and seed sensitivity") {
  const Dataset d = indexed_dataset({40, 40, 40});
  SplitConfig cfg;
  cfg.test_fraction = 0.3;
  cfg.seed = 7;
  const SplitResult a = stratified_split(d, cfg);
  const SplitResult b = stratified_split(d, cfg);
  CHECK(a.test.features() == b.test.features());
  CHECK(a.train.features() == b.train.features());

  cfg.seed = 8;
  const SplitResult c = stratified_split(d, cfg);
  CHECK(a.test.features() != c.test.features());
  CHECK(label_counts(a.test) == label_counts(c.test));  // quotas are seed-free
}

TEST_CASE("split edge fractions and bad input") {
  const Dataset d = indexed_dataset({5, 5});
  SplitConfig cfg;
  cfg.test_fraction = 0.0;
  const SplitResult none = stratified_split(d, cfg);
  CHECK(none.test.rows() == 0);
  CHECK(none.train.features() == d.features());

  cfg.test_fraction = 1.0;
  const SplitResult all = stratified_split(d, cfg);
  CHECK(all.train.rows() == 0);
  CHECK(all.test.features() == d.features());

  cfg.test_fraction = -0.1;
  CHECK_THROWS_AS(stratified_split(d, cfg), InvalidInput);
  cfg.test_fraction = 1.1;
  CHECK_THROWS_AS(stratified_split(d, cfg), InvalidInput);
  cfg.test_fraction = std::nan("");
  CHECK_THROWS_AS(stratified_split(d, cfg), InvalidInput);
  cfg.test_fraction = 0.5;
  CHECK_THROWS_AS(stratified_split(Dataset(), cfg), InvalidInput);

  // Single-member classes survive quota rounding.
  const Dataset tiny = indexed_dataset({1, 1, 1, 10});
  cfg.test_fraction = 0.3;
  const SplitResult s = stratified_split(tiny, cfg);
  CHECK(s.test.rows() + s.train.rows() == 13);
  CHECK(s.test.rows() == 4);  // llround(3.9)
}

TEST_CASE("transformed split feeds back through transform_row") {
  const Dataset d = testutil::make_blobs(30, 3, 2, 9);
  const StandardizerParams params = fit_standardizer(d);
  const Dataset t = transform(d, params);
  std::vector<double> buf(3);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    transform_row(d.row(i).data(), params, buf.data());
    for (std::size_t f = 0; f < 3; ++f) CHECK(buf[f] == t.at(i, f));
  }
}
