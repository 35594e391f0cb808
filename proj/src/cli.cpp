#include "tiltsvm/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiltsvm/dataset.hpp"
#include "tiltsvm/errors.hpp"
#include "tiltsvm/imu_sim.hpp"
#include "tiltsvm/model_selection.hpp"
#include "tiltsvm/preprocess.hpp"
#include "tiltsvm/svg.hpp"
#include "tiltsvm/svm.hpp"
#include "tiltsvm/util.hpp"

namespace tiltsvm {

namespace {

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad numeric list entry '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

struct KernelFlags {
  std::string family = "linear";
  double c = 1.0;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 1.0;
  double tol = 1e-3;
  long max_passes = 1'000'000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kernel", family, "Kernel family: linear, poly or rbf");
    cmd->add_option("--c", c, "Soft-margin penalty");
    cmd->add_option("--gamma", gamma, "Kernel width (poly, rbf)");
    cmd->add_option("--degree", degree, "Polynomial degree");
    cmd->add_option("--coef0", coef0, "Polynomial offset");
    cmd->add_option("--tol", tol, "Optimality tolerance");
    cmd->add_option("--max-passes", max_passes, "Pair-update budget");
  }

  KernelSpec kernel() const {
    KernelSpec spec;
    spec.family = kernel_family_from_name(family);
    spec.gamma = gamma;
    spec.degree = degree;
    spec.coef0 = coef0;
    return spec;
  }

  TrainConfig train() const {
    TrainConfig cfg;
    cfg.c = c;
    cfg.tol = tol;
    cfg.max_passes = max_passes;
    return cfg;
  }
};

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Tilt-angle classification on simulated IMU readings"};
  app.require_subcommand(1);

  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Write a synthetic sensor dataset");
  std::string gen_out;
  int gen_samples = 100;
  std::uint64_t gen_seed = 0;
  cmd_generate->add_option("--out", gen_out, "Output CSV path")->required();
  cmd_generate->add_option("--samples-per-class", gen_samples,
                           "Rows generated per class");
  cmd_generate->add_option("--seed", gen_seed, "Noise seed");

  CLI::App* cmd_split =
      app.add_subcommand("split", "Stratified train/test split of a CSV");
  std::string split_in, split_train, split_test;
  double split_fraction = 0.3;
  std::uint64_t split_seed = 0;
  cmd_split->add_option("--in", split_in, "Input CSV path")->required();
  cmd_split->add_option("--train-out", split_train, "Training CSV path")
      ->required();
  cmd_split->add_option("--test-out", split_test, "Test CSV path")->required();
  cmd_split->add_option("--test-fraction", split_fraction,
                        "Held-out fraction, in (0, 1)");
  cmd_split->add_option("--seed", split_seed, "Shuffle seed");

  CLI::App* cmd_train =
      app.add_subcommand("train", "Train a multiclass model on a CSV");
  std::string train_data, train_model;
  KernelFlags train_flags;
  cmd_train->add_option("--data", train_data, "Training CSV path")->required();
  cmd_train->add_option("--model", train_model, "Model JSON output path")
      ->required();
  train_flags.attach(cmd_train);

  CLI::App* cmd_eval =
      app.add_subcommand("eval", "Report accuracy of a model on a CSV");
  std::string eval_data, eval_model;
  cmd_eval->add_option("--data", eval_data, "Labeled CSV path")->required();
  cmd_eval->add_option("--model", eval_model, "Model JSON path")->required();

  CLI::App* cmd_predict =
      app.add_subcommand("predict", "Print predicted labels, one per row");
  std::string pred_data, pred_model;
  cmd_predict->add_option("--data", pred_data, "Input CSV path (labels ignored)")
      ->required();
  cmd_predict->add_option("--model", pred_model, "Model JSON path")->required();

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "Validation curve over a parameter grid");
  std::string sweep_train, sweep_validation, sweep_axis = "c";
  std::string sweep_values, sweep_curve, sweep_svg;
  KernelFlags sweep_flags;
  cmd_sweep->add_option("--train", sweep_train, "Training CSV path")
      ->required();
  cmd_sweep->add_option("--validation", sweep_validation, "Validation CSV path")
      ->required();
  cmd_sweep->add_option("--axis", sweep_axis, "Swept axis: c, gamma or degree");
  cmd_sweep->add_option("--values", sweep_values,
                        "Comma-separated grid (default grid if omitted)");
  cmd_sweep->add_option("--curve", sweep_curve, "Curve CSV output path")
      ->required();
  cmd_sweep->add_option("--svg", sweep_svg, "Optional SVG output path");
  sweep_flags.attach(cmd_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_generate) {
      GenConfig cfg;
      cfg.samples_per_class = gen_samples;
      cfg.noise.seed = gen_seed;
      const Dataset data = generate_dataset(cfg);
      write_dataset_csv(data, gen_out);
      std::cout << "rows=" << data.rows() << " classes=" << class_count(cfg)
                << "\n";
    } else if (*cmd_split) {
      if (!(split_fraction > 0.0 && split_fraction < 1.0)) {
        throw InvalidInput("split: --test-fraction must lie in (0, 1)");
      }
      const Dataset data = read_dataset_csv(split_in);
      SplitConfig cfg;
      cfg.test_fraction = split_fraction;
      cfg.seed = split_seed;
      const SplitResult parts = stratified_split(data, cfg);
      write_dataset_csv(parts.train, split_train);
      write_dataset_csv(parts.test, split_test);
      std::cout << "train_rows=" << parts.train.rows()
                << " test_rows=" << parts.test.rows() << "\n";
    } else if (*cmd_train) {
      const KernelSpec kernel = train_flags.kernel();
      const TrainConfig cfg = train_flags.train();
      validate_kernel_spec(kernel);
      const Dataset data = read_dataset_csv(train_data);
      const MulticlassModel model = train_multiclass(data, kernel, cfg);
      save_model(model, train_model);
      std::size_t n_sv = 0;
      bool converged = true;
      for (const SvmBinaryModel& bin : model.binaries) {
        n_sv += bin.support_vectors.size();
        converged = converged && bin.converged;
      }
      std::cout << "classes=" << model.classes.size()
                << " support_vectors=" << n_sv
                << " converged=" << (converged ? "true" : "false") << "\n";
    } else if (*cmd_eval) {
      const MulticlassModel model = load_model(eval_model);
      const Dataset data = read_dataset_csv(eval_data);
      std::cout << "accuracy=" << format_g6(accuracy(model, data)) << "\n";
    } else if (*cmd_predict) {
      const MulticlassModel model = load_model(pred_model);
      const Dataset data = read_dataset_csv(pred_data);
      for (int label : predict_all(model, data)) std::cout << label << "\n";
    } else if (*cmd_sweep) {
      SweepConfig cfg;
      cfg.axis = sweep_axis_from_name(sweep_axis);
      if (!sweep_values.empty()) cfg.values = parse_value_list(sweep_values);
      cfg.kernel = sweep_flags.kernel();
      cfg.train = sweep_flags.train();
      validate_kernel_spec(cfg.kernel);
      const Dataset train = read_dataset_csv(sweep_train);
      const Dataset validation = read_dataset_csv(sweep_validation);
      const ValidationCurve curve = validation_curve(train, validation, cfg);
      write_curve_csv(curve, sweep_curve);
      // Selection before the SVG: an all-failed sweep still leaves the CSV
      // behind for diagnosis and exits as a runtime failure.
      const SelectionResult sel = select_optimal(curve);
      if (!sweep_svg.empty()) emit_curve_svg(curve, sweep_svg);
      std::cout << "best_value=" << format_g17(sel.best_value) << "\n"
                << "best_validation_accuracy="
                << format_g6(sel.best_validation_accuracy) << "\n";
    }
    return 0;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tiltsvm
