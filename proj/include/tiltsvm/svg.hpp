#pragma once

#include <filesystem>
#include <string>

#include "tiltsvm/model_selection.hpp"

namespace tiltsvm {

// 720x480 validation-curve plot: train and validation accuracy against the
// swept parameter, log scale for c and gamma, linear for degree.  Failed grid
// points leave gaps.  The output is a pure function of the curve, byte for
// byte.  Throws InvalidInput when no point succeeded.
std::string render_curve_svg(const ValidationCurve& curve);

void emit_curve_svg(const ValidationCurve& curve,
                    const std::filesystem::path& path);

}  // namespace tiltsvm
