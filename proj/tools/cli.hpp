#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psquery::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Decodes \\ \n \t \r \, \xHH. Throws std::invalid_argument on a bad escape.
std::string unescape(std::string_view raw);

/// Splits on unescaped commas, then unescapes each field. "" yields no fields.
std::vector<std::string> split_vars(std::string_view raw);

/// Renders bytes so a result stays on one TSV line.
std::string escape(std::string_view raw);

/// One string per line; a trailing newline does not start an extra query.
std::vector<std::string> parse_query_lines(std::string_view content);

/// Records of a little-endian u32 length followed by that many bytes.
/// Throws std::runtime_error on truncation.
std::vector<std::string> parse_query_records(std::string_view content);

enum class Generator { kRandom, kPeriodic, kUnary };

struct BenchOptions {
  std::vector<std::int64_t> sizes;
  int alphabet = 4;
  Generator generator = Generator::kRandom;
  bool listing = false;
  int repeats = 3;
  int prefixes = 64;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::int64_t size = 0;
  double seconds = 0;
  std::int64_t answers = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<double> slope;  // least-squares fit of log(time) on log(size)
};

std::string generate_text(Generator generator, std::int64_t size, int alphabet, std::uint64_t seed);

/// Times the counting (or listing) pipeline end to end over the size ladder.
/// Sizes must be strictly increasing.
BenchReport run_bench(const BenchOptions& options);

std::optional<double> fit_loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace psquery::cli
