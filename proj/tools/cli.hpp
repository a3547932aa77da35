#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depthkit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kValidationError = 3;
inline constexpr int kResourceError = 4;

inline constexpr unsigned kDefaultMaxGroup = 48;
inline constexpr unsigned kDefaultMaxSym = 8;

// Runs one depthkit command line. args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace depthkit::cli
