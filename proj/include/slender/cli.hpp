#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slender::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name. Tabular output goes to `out` unless an
// output path (or SLENDER_OUTPUT_DIR) redirects it to a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace slender::cli
