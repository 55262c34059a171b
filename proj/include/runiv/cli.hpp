#pragma once

namespace runiv {

/// Full command-line surface; returns the process exit code.
/// 0 = Yes/success, 3 = No, 4 = Indeterminate or missing data,
/// 2 = usage/parse/validation error, 1 = internal error.
int run(int argc, const char* const* argv);

}  // namespace runiv
