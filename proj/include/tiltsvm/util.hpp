#pragma once

#include <filesystem>
#include <string>

namespace tiltsvm {

// printf "%.17g": round-trip exact decimal form of a double.
std::string format_g17(double v);

// printf "%.6g": display precision used for accuracies.
std::string format_g6(double v);

// Write-temp-then-rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace tiltsvm
