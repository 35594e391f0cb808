#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include "tiltsvm/dataset.hpp"
#include "tiltsvm/rng.hpp"

namespace testutil {

// Gaussian blobs, one per class, centers spaced along the all-ones diagonal.
// Rows come out class-major; labels are 0..k-1.
inline tiltsvm::Dataset make_blobs(std::size_t per_class, std::size_t p, int k,
                                   std::uint64_t seed, double spacing = 4.0,
                                   double spread = 1.0) {
  std::vector<double> feats;
  std::vector<int> labels;
  std::vector<std::string> names;
  for (std::size_t f = 0; f < p; ++f) names.push_back("f" + std::to_string(f));
  std::uint64_t row = 0;
  for (int c = 0; c < k; ++c) {
    for (std::size_t s = 0; s < per_class; ++s, ++row) {
      const std::uint64_t stream = tiltsvm::rng::kStreamProbe + row;
      for (std::size_t f = 0; f < p; ++f) {
        feats.push_back(static_cast<double>(c) * spacing +
                        spread * tiltsvm::rng::gaussian(seed, stream, f));
      }
      labels.push_back(c);
    }
  }
  return tiltsvm::Dataset(std::move(feats), p, std::move(labels),
                          std::move(names));
}

// Unique scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    for (int t = 0;; ++t) {
      auto candidate = base / ("tiltsvm_test_" + std::to_string(::getpid()) +
                               "_" + std::to_string(t));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path = candidate;
        return;
      }
    }
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const {
    return path / name;
  }
};

}  // namespace testutil
