#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordcover/block_design.hpp"

namespace ordcover::cli {

enum class OutputFormat { Table, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// A design read from a file. t and lambda come from the "v t lambda" header
/// when present.
struct DesignFile {
  Design design;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> lambda;
};

/// Accepts the line format (optional "v t lambda" header, then one
/// comma-separated block per line) or a JSON array of arrays. Without a
/// header v is the largest label. Throws Error{InvalidDesign} on bad input.
DesignFile parse_design(std::istream& in);

}  // namespace ordcover::cli
