#pragma once

#include <iosfwd>

namespace ntn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;

/// Entry point of the ntn-offload-sim command line. CSV goes to `--out`
/// or `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ntn
