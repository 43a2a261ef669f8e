#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaobell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitThreshold = 3;

/// Runs the command line (args excludes the program name). Tables go to
/// --output when given, otherwise to `out`; the human-readable summary goes
/// to `out` when the table went to a file and to `err` otherwise.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// "22.5", "45deg", "0.3927rad". Bare numbers are degrees.
double parse_angle(std::string_view text);

/// Comma-separated angles; an item may be a range "start:stop:count[unit]"
/// of `count` equally spaced values including both ends. Throws UsageError
/// on empty input.
std::vector<double> parse_angle_list(std::string_view text);

/// Fixed 9-significant-digit rendering used for every numeric output.
std::string format_number(double value);

}  // namespace chaobell::cli
