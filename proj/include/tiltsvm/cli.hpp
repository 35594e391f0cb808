#pragma once

namespace tiltsvm {

// Entry point behind the tiltsvm binary.  Exit codes: 0 success, 1 invalid
// flags or inputs, 2 runtime failure (unreadable or unwritable files, no
// usable sweep result).  Diagnostics go to stderr.
int run_cli(int argc, char** argv);

}  // namespace tiltsvm
