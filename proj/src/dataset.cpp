#include "tiltsvm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/util.hpp"

namespace tiltsvm {

const std::vector<std::string> kSensorColumns = {
    "ax", "ay", "az", "gx", "gy", "gz", "mx", "my", "mz"};

Dataset::Dataset(std::vector<double> features_row_major, std::size_t p,
                 std::vector<int> labels,
                 std::vector<std::string> column_names)
    : features_(std::move(features_row_major)),
      p_(p),
      labels_(std::move(labels)),
      column_names_(std::move(column_names)) {
  if (p_ == 0) throw InvalidInput("dataset: zero feature columns");
  if (features_.size() != labels_.size() * p_) {
    throw InvalidInput("dataset: feature/label size mismatch");
  }
  if (column_names_.size() != p_) {
    throw InvalidInput("dataset: column name count != p");
  }
  for (double v : features_) {
    if (!std::isfinite(v)) {
      throw InvalidInput("dataset: non-finite feature value");
    }
  }
}

std::vector<int> Dataset::distinct_labels() const {
  std::set<int> s(labels_.begin(), labels_.end());
  return {s.begin(), s.end()};
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<double> feats;
  feats.reserve(idx.size() * p_);
  std::vector<int> labs;
  labs.reserve(idx.size());
  for (std::size_t i : idx) {
    if (i >= rows()) throw InvalidInput("dataset: row index out of range");
    feats.insert(feats.end(), features_.begin() + i * p_,
                 features_.begin() + (i + 1) * p_);
    labs.push_back(labels_[i]);
  }
  return Dataset(std::move(feats), p_, std::move(labs), column_names_);
}

namespace {

const char* kHeader = "ax,ay,az,gx,gy,gz,mx,my,mz,label";

double parse_double(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
      !std::isfinite(v)) {
    throw InvalidInput("csv: bad numeric field at line " +
                       std::to_string(line_no));
  }
  return v;
}

int parse_label(std::string_view tok, std::size_t line_no) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InvalidInput("csv: bad label at line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

std::string dataset_to_csv(const Dataset& d) {
  if (d.cols() != kSensorColumns.size() ||
      d.column_names() != kSensorColumns) {
    throw InvalidInput("csv: dataset does not use the sensor column schema");
  }
  std::string out;
  out.reserve(64 + d.rows() * 24 * (d.cols() + 1));
  out += kHeader;
  out += '\n';
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_g17(d.at(i, j));
    }
    out += ',';
    out += std::to_string(d.labels()[i]);
    out += '\n';
  }
  return out;
}

Dataset dataset_from_csv(const std::string& text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::vector<double> feats;
  std::vector<int> labels;
  const std::size_t p = kSensorColumns.size();

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kHeader) throw InvalidInput("csv: unexpected header");
      continue;
    }
    if (line.empty()) continue;

    std::size_t field = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      const std::string_view tok =
          line.substr(start, comma == std::string_view::npos
                                 ? std::string_view::npos
                                 : comma - start);
      if (field < p) {
        feats.push_back(parse_double(tok, line_no));
      } else if (field == p) {
        labels.push_back(parse_label(tok, line_no));
      } else {
        throw InvalidInput("csv: too many fields at line " +
                           std::to_string(line_no));
      }
      ++field;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (field != p + 1) {
      throw InvalidInput("csv: expected " + std::to_string(p + 1) +
                         " fields at line " + std::to_string(line_no));
    }
  }
  if (line_no == 0) throw InvalidInput("csv: empty input");
  return Dataset(std::move(feats), p, std::move(labels), kSensorColumns);
}

void write_dataset_csv(const Dataset& d, const std::filesystem::path& path) {
  atomic_write_file(path, dataset_to_csv(d));
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  return dataset_from_csv(read_file(path));
}

}  // namespace tiltsvm
