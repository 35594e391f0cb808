#include "tiltsvm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/util.hpp"

namespace tiltsvm {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 700.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 430.0;

const char* kTrainColor = "#1f77b4";
const char* kValColor = "#d62728";

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string y_of(double acc) {
  return f2(kBottom - acc * (kBottom - kTop));
}

void line(std::string& out, double x1, double y1, double x2, double y2,
          const char* stroke) {
  out += "<line x1=\"" + f2(x1) + "\" y1=\"" + f2(y1) + "\" x2=\"" + f2(x2) +
         "\" y2=\"" + f2(y2) + "\" stroke=\"" + stroke + "\"/>\n";
}

void text(std::string& out, double x, double y, const char* anchor,
          const std::string& s) {
  out += "<text x=\"" + f2(x) + "\" y=\"" + f2(y) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" +
         anchor + "\">" + s + "</text>\n";
}

void series(std::string& out, const ValidationCurve& curve,
            const std::vector<double>& xs, bool validation,
            const char* color) {
  std::size_t n_ok = 0;
  for (const CurvePoint& pt : curve.points) n_ok += pt.ok;
  if (n_ok >= 2) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
      const CurvePoint& pt = curve.points[k];
      if (!pt.ok) continue;
      if (!first) out += ' ';
      first = false;
      out += f2(xs[k]) + ',' +
             y_of(validation ? pt.validation_accuracy : pt.train_accuracy);
    }
    out += "\"/>\n";
  }
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    const CurvePoint& pt = curve.points[k];
    if (!pt.ok) continue;
    out += "<circle cx=\"" + f2(xs[k]) + "\" cy=\"" +
           y_of(validation ? pt.validation_accuracy : pt.train_accuracy) +
           "\" r=\"3\" fill=\"";
    out += color;
    out += "\"/>\n";
  }
}

}  // namespace

std::string render_curve_svg(const ValidationCurve& curve) {
  if (curve.points.empty()) throw InvalidInput("svg: empty curve");
  bool any_ok = false;
  for (const CurvePoint& pt : curve.points) any_ok = any_ok || pt.ok;
  if (!any_ok) throw InvalidInput("svg: no successful grid point");

  const bool log_axis = curve.param_name != "degree";
  double lo = curve.points.front().value;
  double hi = lo;
  for (const CurvePoint& pt : curve.points) {
    if (log_axis && pt.value <= 0.0) {
      throw InvalidInput("svg: log axis needs positive values");
    }
    lo = std::min(lo, pt.value);
    hi = std::max(hi, pt.value);
  }
  const auto coord = [&](double v) { return log_axis ? std::log10(v) : v; };
  const double span = coord(hi) - coord(lo);
  std::vector<double> xs;
  xs.reserve(curve.points.size());
  for (const CurvePoint& pt : curve.points) {
    const double t =
        span > 0.0 ? (coord(pt.value) - coord(lo)) / span : 0.5;
    xs.push_back(kLeft + t * (kRight - kLeft));
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"480\" viewBox=\"0 0 720 480\">\n";
  out += "<rect width=\"" + f2(kWidth) + "\" height=\"" + f2(kHeight) +
         "\" fill=\"white\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double acc = 0.25 * k;
    const double y = kBottom - acc * (kBottom - kTop);
    line(out, kLeft, y, kRight, y, k == 0 ? "#000000" : "#dddddd");
    text(out, kLeft - 8.0, y + 4.0, "end", format_g6(acc));
  }
  line(out, kLeft, kTop, kLeft, kBottom, "#000000");
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    line(out, xs[k], kBottom, xs[k], kBottom + 5.0, "#000000");
    text(out, xs[k], kBottom + 20.0, "middle",
         format_g6(curve.points[k].value));
  }
  text(out, (kLeft + kRight) / 2.0, kHeight - 10.0, "middle",
       curve.param_name);
  text(out, kLeft - 45.0, kTop - 6.0, "start", "accuracy");

  series(out, curve, xs, false, kTrainColor);
  series(out, curve, xs, true, kValColor);

  line(out, kRight - 150.0, kTop + 14.0, kRight - 120.0, kTop + 14.0,
       kTrainColor);
  text(out, kRight - 112.0, kTop + 18.0, "start", "train");
  line(out, kRight - 150.0, kTop + 32.0, kRight - 120.0, kTop + 32.0,
       kValColor);
  text(out, kRight - 112.0, kTop + 36.0, "start", "validation");

  out += "</svg>\n";
  return out;
}

void emit_curve_svg(const ValidationCurve& curve,
                    const std::filesystem::path& path) {
  atomic_write_file(path, render_curve_svg(curve));
}

}  // namespace tiltsvm
