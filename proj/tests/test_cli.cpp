#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tiltsvm/util.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TILTSVM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char ch : text) n += ch == '\n';
  return n;
}

const std::string kHeader = "ax,ay,az,gx,gy,gz,mx,my,mz,label";

}  // namespace

TEST_CASE("help and argument errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("generate").code == 1);                  // --out is required
  CHECK(run("generate --nonsense x").code == 1);
  CHECK(run("eval --data a.csv").code == 1);         // --model is required
}

TEST_CASE("generate writes a deterministic labeled csv") {
  testutil::TempDir tmp;
  const std::string a = tmp.file("a.csv").string();
  const std::string b = tmp.file("b.csv").string();

  RunResult r = run("generate --out " + a + " --samples-per-class 5 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("rows=65") != std::string::npos);
  CHECK(r.out.find("classes=13") != std::string::npos);

  const std::string text = tiltsvm::read_file(a);
  CHECK(text.compare(0, kHeader.size(), kHeader) == 0);
  CHECK(line_count(text) == 66);  // header + 13 * 5 rows

  CHECK(run("generate --out " + b + " --samples-per-class 5 --seed 7").code == 0);
  CHECK(tiltsvm::read_file(b) == text);

  CHECK(run("generate --out " + b + " --samples-per-class 5 --seed 8").code == 0);
  CHECK(tiltsvm::read_file(b) != text);
}

TEST_CASE("split partitions a csv and validates the fraction") {
  testutil::TempDir tmp;
  const std::string data = tmp.file("data.csv").string();
  const std::string tr = tmp.file("train.csv").string();
  const std::string te = tmp.file("test.csv").string();
  REQUIRE(run("generate --out " + data + " --samples-per-class 4 --seed 1").code == 0);

  const std::string base = "split --in " + data + " --train-out " + tr +
                           " --test-out " + te + " --seed 3";
  RunResult r = run(base + " --test-fraction 0.25");
  CHECK(r.code == 0);
  CHECK(r.out.find("train_rows=39 test_rows=13") != std::string::npos);
  CHECK(line_count(tiltsvm::read_file(tr)) == 40);
  CHECK(line_count(tiltsvm::read_file(te)) == 14);

  const std::string tr_bytes = tiltsvm::read_file(tr);
  CHECK(run(base + " --test-fraction 0.25").code == 0);
  CHECK(tiltsvm::read_file(tr) == tr_bytes);

  CHECK(run(base + " --test-fraction 0").code == 1);
  CHECK(run(base + " --test-fraction 1").code == 1);
  CHECK(run(base + " --test-fraction 1.5").code == 1);
}

TEST_CASE("train, eval and predict round trip") {
  testutil::TempDir tmp;
  const std::string data = tmp.file("data.csv").string();
  const std::string tr = tmp.file("train.csv").string();
  const std::string te = tmp.file("test.csv").string();
  const std::string model = tmp.file("model.json").string();
  REQUIRE(run("generate --out " + data + " --samples-per-class 6 --seed 2").code == 0);
  REQUIRE(run("split --in " + data + " --train-out " + tr + " --test-out " + te +
              " --test-fraction 0.25 --seed 2").code == 0);

  RunResult r = run("train --data " + tr + " --model " + model +
                    " --kernel rbf --c 10 --gamma 0.5");
  CHECK(r.code == 0);
  CHECK(r.out.find("classes=13") != std::string::npos);
  CHECK(r.out.find("converged=true") != std::string::npos);
  REQUIRE(fs::exists(model));
  const std::string model_bytes = tiltsvm::read_file(model);
  CHECK(model_bytes.rfind("{", 0) == 0);

  CHECK(run("train --data " + tr + " --model " + model +
            " --kernel rbf --c 10 --gamma 0.5").code == 0);
  CHECK(tiltsvm::read_file(model) == model_bytes);

  r = run("eval --data " + te + " --model " + model);
  CHECK(r.code == 0);
  CHECK(r.out.find("accuracy=") != std::string::npos);

  r = run("predict --data " + te + " --model " + model);
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 20);
  for (std::size_t pos = 0; pos < r.out.size();) {
    const std::size_t eol = r.out.find('\n', pos);
    const std::string tok = r.out.substr(pos, eol - pos);
    CHECK(tok.find_first_not_of("0123456789") == std::string::npos);
    pos = eol + 1;
  }
}

TEST_CASE("train rejects bad inputs before writing anything") {
  testutil::TempDir tmp;
  const std::string data = tmp.file("data.csv").string();
  const std::string model = tmp.file("model.json").string();
  REQUIRE(run("generate --out " + data + " --samples-per-class 3 --seed 1").code == 0);

  CHECK(run("train --data " + tmp.file("absent.csv").string() + " --model " +
            model).code == 2);
  CHECK_FALSE(fs::exists(model));

  CHECK(run("train --data " + data + " --model " + model +
            " --kernel sigmoid").code == 1);
  CHECK_FALSE(fs::exists(model));

  CHECK(run("train --data " + data + " --model " + model +
            " --kernel rbf --gamma -1").code == 1);
  CHECK_FALSE(fs::exists(model));

  CHECK(run("train --data " + data + " --model " + model + " --c 0").code == 1);
  CHECK_FALSE(fs::exists(model));

  const std::string junk = tmp.file("junk.csv").string();
  tiltsvm::atomic_write_file(junk, "not,a,sensor\n1,2,3\n");
  CHECK(run("train --data " + junk + " --model " + model).code == 1);
  CHECK_FALSE(fs::exists(model));
}

TEST_CASE("sweep writes the curve, the svg and the chosen point") {
  testutil::TempDir tmp;
  const std::string data = tmp.file("data.csv").string();
  const std::string tr = tmp.file("train.csv").string();
  const std::string te = tmp.file("test.csv").string();
  const std::string curve = tmp.file("curve.csv").string();
  const std::string svg = tmp.file("curve.svg").string();
  REQUIRE(run("generate --out " + data + " --samples-per-class 6 --seed 4").code == 0);
  REQUIRE(run("split --in " + data + " --train-out " + tr + " --test-out " + te +
              " --test-fraction 0.25 --seed 4").code == 0);

  const RunResult r =
      run("sweep --train " + tr + " --validation " + te +
          " --axis c --values 0.5,5 --kernel rbf --gamma 0.5 --curve " + curve +
          " --svg " + svg);
  CHECK(r.code == 0);
  CHECK(r.out.find("best_value=") != std::string::npos);
  CHECK(r.out.find("best_validation_accuracy=") != std::string::npos);
  REQUIRE(fs::exists(curve));
  REQUIRE(fs::exists(svg));
  const std::string csv = tiltsvm::read_file(curve);
  CHECK(csv.rfind("param_name,param_value,train_accuracy,validation_accuracy,"
                  "converged\n", 0) == 0);
  CHECK(line_count(csv) == 3);
  CHECK(tiltsvm::read_file(svg).find("<svg") != std::string::npos);
}

TEST_CASE("sweep argument validation happens before any output") {
  testutil::TempDir tmp;
  const std::string data = tmp.file("data.csv").string();
  const std::string tr = tmp.file("train.csv").string();
  const std::string te = tmp.file("test.csv").string();
  const std::string curve = tmp.file("curve.csv").string();
  REQUIRE(run("generate --out " + data + " --samples-per-class 4 --seed 5").code == 0);
  REQUIRE(run("split --in " + data + " --train-out " + tr + " --test-out " + te +
              " --test-fraction 0.25 --seed 5").code == 0);

  const std::string base =
      "sweep --train " + tr + " --validation " + te + " --curve " + curve;
  CHECK(run(base + " --axis frequency").code == 1);
  CHECK(run(base + " --values abc").code == 1);
  CHECK(run(base + " --values 1,0.5").code == 1);
  CHECK(run(base + " --values -3,1").code == 1);
  CHECK_FALSE(fs::exists(curve));
}

TEST_CASE("an all-failed sweep leaves the curve csv but no svg") {
  testutil::TempDir tmp;
  const std::string mono = tmp.file("mono.csv").string();
  std::string text = kHeader + "\n";
  text += "0.1,0,9.8,0,0,0,0.5,25,-43,0\n";
  text += "0.2,0,9.7,0,0,0,0.4,25,-43,0\n";
  text += "0.3,0,9.9,0,0,0,0.6,25,-43,0\n";
  tiltsvm::atomic_write_file(mono, text);

  const std::string curve = tmp.file("curve.csv").string();
  const std::string svg = tmp.file("curve.svg").string();
  const RunResult r = run("sweep --train " + mono + " --validation " + mono +
                          " --axis c --values 1,10 --curve " + curve +
                          " --svg " + svg);
  CHECK(r.code == 2);
  CHECK(fs::exists(curve));
  CHECK_FALSE(fs::exists(svg));
  const std::string csv = tiltsvm::read_file(curve);
  CHECK(line_count(csv) == 3);
  CHECK(csv.find("false") != std::string::npos);
  CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("the whole pipeline is reproducible byte for byte") {
  testutil::TempDir tmp;
  const auto stage = [&](const std::string& tag) {
    const std::string data = tmp.file(tag + "-data.csv").string();
    const std::string tr = tmp.file(tag + "-train.csv").string();
    const std::string te = tmp.file(tag + "-test.csv").string();
    const std::string model = tmp.file(tag + "-model.json").string();
    const std::string curve = tmp.file(tag + "-curve.csv").string();
    const std::string svg = tmp.file(tag + "-curve.svg").string();
    REQUIRE(run("generate --out " + data + " --samples-per-class 6 --seed 9").code == 0);
    REQUIRE(run("split --in " + data + " --train-out " + tr + " --test-out " +
                te + " --test-fraction 0.25 --seed 3").code == 0);
    REQUIRE(run("train --data " + tr + " --model " + model +
                " --kernel rbf --c 10 --gamma 0.5").code == 0);
    REQUIRE(run("sweep --train " + tr + " --validation " + te +
                " --axis c --values 0.5,5 --kernel rbf --gamma 0.5 --curve " +
                curve + " --svg " + svg).code == 0);
    return std::vector<std::string>{
        tiltsvm::read_file(data),  tiltsvm::read_file(tr),
        tiltsvm::read_file(te),    tiltsvm::read_file(model),
        tiltsvm::read_file(curve), tiltsvm::read_file(svg)};
  };
  const std::vector<std::string> first = stage("a");
  const std::vector<std::string> second = stage("b");
  REQUIRE(first.size() == second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k] == second[k]);
  }
}
