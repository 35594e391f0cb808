#include <cmath>
#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/svm.hpp"
#include "tiltsvm/util.hpp"

namespace tiltsvm {

namespace {

constexpr int kFormatVersion = 1;

void append_number_array(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_g17(v[k]);
  }
  out += ']';
}

using nlohmann::json;

const json& require(const json& obj, const char* key, const char* where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InvalidInput(std::string("model: missing '") + key + "' in " +
                       where);
  }
  return *it;
}

double require_finite(const json& v, const char* what) {
  if (!v.is_number()) {
    throw InvalidInput(std::string("model: ") + what + " must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw InvalidInput(std::string("model: ") + what + " must be finite");
  }
  return d;
}

int require_int(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw InvalidInput(std::string("model: ") + what + " must be an integer");
  }
  return v.get<int>();
}

std::vector<double> require_vector(const json& v, const char* what) {
  if (!v.is_array()) {
    throw InvalidInput(std::string("model: ") + what + " must be an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(require_finite(e, what));
  return out;
}

}  // namespace

void save_model(const MulticlassModel& model,
                const std::filesystem::path& path) {
  std::string out;
  out += "{\n";
  out += "  \"format_version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"kernel\": {\"family\": \"";
  out += kernel_family_name(model.kernel.family);
  out += "\", \"gamma\": " + format_g17(model.kernel.gamma);
  out += ", \"degree\": " + std::to_string(model.kernel.degree);
  out += ", \"coef0\": " + format_g17(model.kernel.coef0) + "},\n";
  out += "  \"c\": " + format_g17(model.c) + ",\n";
  out += "  \"classes\": [";
  for (std::size_t k = 0; k < model.classes.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(model.classes[k]);
  }
  out += "],\n";
  out += "  \"binaries\": [\n";
  for (std::size_t b = 0; b < model.binaries.size(); ++b) {
    const SvmBinaryModel& bin = model.binaries[b];
    out += "    {\n";
    out += "      \"support_vectors\": [";
    for (std::size_t k = 0; k < bin.support_vectors.size(); ++k) {
      out += k ? ",\n        " : "\n        ";
      append_number_array(out, bin.support_vectors[k]);
    }
    out += bin.support_vectors.empty() ? "],\n" : "\n      ],\n";
    out += "      \"coefficients\": ";
    append_number_array(out, bin.coefficients);
    out += ",\n";
    out += "      \"bias\": " + format_g17(bin.bias) + ",\n";
    out += std::string("      \"converged\": ") +
           (bin.converged ? "true" : "false") + "\n";
    out += b + 1 < model.binaries.size() ? "    },\n" : "    }\n";
  }
  out += "  ],\n";
  out += "  \"standardizer\": {\"mu\": ";
  append_number_array(out, model.standardizer.mu);
  out += ", \"sigma\": ";
  append_number_array(out, model.standardizer.sigma);
  out += "}\n";
  out += "}\n";
  atomic_write_file(path, out);
}

MulticlassModel load_model(const std::filesystem::path& path) {
  json root;
  try {
    root = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("model: json parse failed: ") + e.what());
  }
  if (!root.is_object()) throw InvalidInput("model: root must be an object");
  if (require_int(require(root, "format_version", "root"), "format_version") !=
      kFormatVersion) {
    throw InvalidInput("model: unsupported format_version");
  }

  MulticlassModel model;
  const json& jk = require(root, "kernel", "root");
  if (!jk.is_object()) throw InvalidInput("model: kernel must be an object");
  const json& fam = require(jk, "family", "kernel");
  if (!fam.is_string()) throw InvalidInput("model: kernel family must be a string");
  model.kernel.family = kernel_family_from_name(fam.get<std::string>());
  model.kernel.gamma = require_finite(require(jk, "gamma", "kernel"), "gamma");
  model.kernel.degree = require_int(require(jk, "degree", "kernel"), "degree");
  model.kernel.coef0 = require_finite(require(jk, "coef0", "kernel"), "coef0");
  validate_kernel_spec(model.kernel);

  model.c = require_finite(require(root, "c", "root"), "c");
  if (model.c <= 0.0) throw InvalidInput("model: c must be > 0");

  const json& jcls = require(root, "classes", "root");
  if (!jcls.is_array() || jcls.size() < 2) {
    throw InvalidInput("model: classes must list at least two labels");
  }
  for (const json& e : jcls) {
    const int label = require_int(e, "class label");
    if (!model.classes.empty() && label <= model.classes.back()) {
      throw InvalidInput("model: classes must be strictly ascending");
    }
    model.classes.push_back(label);
  }

  const json& jstd = require(root, "standardizer", "root");
  if (!jstd.is_object()) {
    throw InvalidInput("model: standardizer must be an object");
  }
  model.standardizer.mu =
      require_vector(require(jstd, "mu", "standardizer"), "mu");
  model.standardizer.sigma =
      require_vector(require(jstd, "sigma", "standardizer"), "sigma");
  const std::size_t p = model.standardizer.mu.size();
  if (p == 0 || model.standardizer.sigma.size() != p) {
    throw InvalidInput("model: standardizer mu/sigma must be equal nonzero length");
  }
  for (double s : model.standardizer.sigma) {
    if (s < 0.0) throw InvalidInput("model: sigma must be >= 0");
  }

  const json& jbins = require(root, "binaries", "root");
  if (!jbins.is_array() || jbins.size() != model.classes.size()) {
    throw InvalidInput("model: need one binary per class");
  }
  for (std::size_t b = 0; b < jbins.size(); ++b) {
    const json& jb = jbins[b];
    if (!jb.is_object()) throw InvalidInput("model: binary must be an object");
    SvmBinaryModel bin;
    bin.kernel = model.kernel;
    // Binaries follow class order, one-vs-rest.
    bin.positive_label = model.classes[b];
    bin.negative_label = -1;
    const json& jsv = require(jb, "support_vectors", "binary");
    if (!jsv.is_array()) {
      throw InvalidInput("model: support_vectors must be an array");
    }
    for (const json& row : jsv) {
      std::vector<double> sv = require_vector(row, "support vector");
      if (sv.size() != p) {
        throw InvalidInput("model: support vector width mismatch");
      }
      bin.support_vectors.push_back(std::move(sv));
    }
    bin.coefficients =
        require_vector(require(jb, "coefficients", "binary"), "coefficients");
    if (bin.coefficients.size() != bin.support_vectors.size()) {
      throw InvalidInput("model: coefficient count mismatch");
    }
    bin.bias = require_finite(require(jb, "bias", "binary"), "bias");
    const json& jconv = require(jb, "converged", "binary");
    if (!jconv.is_boolean()) {
      throw InvalidInput("model: converged must be a boolean");
    }
    bin.converged = jconv.get<bool>();
    model.binaries.push_back(std::move(bin));
  }
  return model;
}

}  // namespace tiltsvm
