#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

// Immutable feature matrix + labels.  Rows are samples, columns are named
// features; all entries finite (validated at construction).  N = 0 is
// representable (a degenerate split can produce it); operations that need
// data reject it.

namespace tiltsvm {

class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<double> features_row_major, std::size_t p,
          std::vector<int> labels, std::vector<std::string> column_names);

  std::size_t rows() const { return labels_.size(); }
  std::size_t cols() const { return p_; }

  double at(std::size_t i, std::size_t j) const {
    return features_[i * p_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * p_, p_};
  }
  const std::vector<double>& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& column_names() const {
    return column_names_;
  }

  // Sorted distinct labels.
  std::vector<int> distinct_labels() const;

  // Dataset with the given rows (in the given order).
  Dataset select_rows(const std::vector<std::size_t>& idx) const;

 private:
  std::vector<double> features_;  // rows() x p_, row-major
  std::size_t p_ = 0;
  std::vector<int> labels_;
  std::vector<std::string> column_names_;
};

// The 9 sensor channels, in column order.
extern const std::vector<std::string> kSensorColumns;

// CSV with header "ax,ay,az,gx,gy,gz,mx,my,mz,label", one sample per line,
// doubles as %.17g, label as integer, "\n" line endings.
std::string dataset_to_csv(const Dataset& d);
Dataset dataset_from_csv(const std::string& text);

void write_dataset_csv(const Dataset& d, const std::filesystem::path& path);
Dataset read_dataset_csv(const std::filesystem::path& path);

}  // namespace tiltsvm
