#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "psquery/count_engine.hpp"
#include "psquery/list_engine.hpp"
#include "psquery/occurrence_index.hpp"
#include "psquery/reversed_adapter.hpp"
#include "psquery/suffix_tree.hpp"

namespace psquery::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

enum class Mode { kCountMps, kListMps, kCountSpm, kListSpm };

struct QueryArgs {
  std::string text_path;
  std::optional<std::string> inline_text;
  std::string fixed;
  std::optional<std::string> vars;
  std::optional<std::string> queries;
  std::optional<std::string> queries_bin;
  bool materialize = false;
};

void add_query_options(CLI::App& sub, QueryArgs& args, bool listing) {
  sub.add_option("text_file", args.text_path, "File holding the text (raw bytes)");
  sub.add_option("--text", args.inline_text, "Literal text instead of a file (escapes allowed)");
  sub.add_option("--fixed", args.fixed, "The single fixed string (escapes allowed)");
  auto* vars = sub.add_option("--vars", args.vars, "Comma-separated variable strings (escapes allowed)");
  auto* lines = sub.add_option("--queries", args.queries, "File with one variable string per line");
  auto* records = sub.add_option("--queries-bin", args.queries_bin, "File of u32-LE length-prefixed strings");
  vars->excludes(lines)->excludes(records);
  lines->excludes(records);
  if (listing) sub.add_flag("--materialize", args.materialize, "Append the substring itself to each row");
}

Text load_text(const QueryArgs& args) {
  if (args.inline_text) return Text(unescape(*args.inline_text));
  if (args.text_path.empty()) throw CLI::ValidationError("text", "a text file or --text is required");
  return Text(read_file(args.text_path));
}

std::vector<std::string> load_vars(const QueryArgs& args) {
  if (args.vars) return split_vars(*args.vars);
  if (args.queries) return parse_query_lines(read_file(*args.queries));
  if (args.queries_bin) {
    try {
      return parse_query_records(read_file(*args.queries_bin));
    } catch (const IoError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw CLI::ValidationError("--queries-bin", e.what());
    }
  }
  return {};
}

void print_lists(std::ostream& out, const Text& text, ListAnswer answer, bool materialize) {
  for (std::size_t i = 0; i < answer.lists.size(); ++i) {
    auto& list = answer.lists[i];
    std::sort(list.begin(), list.end());
    for (const SubstringRef& ref : list) {
      out << i << '\t' << ref.start << ':' << ref.end;
      if (materialize) out << '\t' << escape(text.materialize(ref));
      out << '\n';
    }
  }
}

void run_query(Mode mode, const QueryArgs& args, std::ostream& out) {
  const Text text = load_text(args);
  const std::string fixed = unescape(args.fixed);
  const std::vector<std::string> vars = load_vars(args);

  switch (mode) {
    case Mode::kCountMps:
    case Mode::kCountSpm: {
      const CountAnswer answer = mode == Mode::kCountMps ? count_all(text, CountQuery{vars, fixed})
                                                         : count_all_reversed(text, ReversedQuery{fixed, vars});
      for (std::size_t i = 0; i < answer.counts.size(); ++i) out << i << '\t' << answer.counts[i] << '\n';
      break;
    }
    case Mode::kListMps:
      print_lists(out, text, list_all(text, vars, fixed), args.materialize);
      break;
    case Mode::kListSpm:
      print_lists(out, text, list_all_reversed(text, ReversedQuery{fixed, vars}), args.materialize);
      break;
  }
}

template <typename T>
void print_row(std::ostream& out, std::string_view name, const std::vector<T>& values) {
  out << name << ':';
  for (const auto v : values) out << ' ' << static_cast<std::int64_t>(v);
  out << '\n';
}

void dump_index(const QueryArgs& args, std::ostream& out) {
  const Text text = load_text(args);
  const OccurrenceIndex idx = OccurrenceIndex::build(text, unescape(args.fixed));
  print_row(out, "SO", idx.so());
  print_row(out, "CSO", idx.cso());
  print_row(out, "NextSO", idx.next_so());
  out << SuffixTree::build(text).export_dot();
}

}  // namespace

std::string unescape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '\\') {
      out.push_back(raw[i]);
      continue;
    }
    if (++i == raw.size()) throw std::invalid_argument("dangling backslash");
    switch (raw[i]) {
      case '\\': out.push_back('\\'); break;
      case ',': out.push_back(','); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case 'x': {
        const int hi = i + 1 < raw.size() ? hex_digit(raw[i + 1]) : -1;
        const int lo = i + 2 < raw.size() ? hex_digit(raw[i + 2]) : -1;
        if (hi < 0 || lo < 0) throw std::invalid_argument("bad \\x escape");
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        break;
      }
      default:
        throw std::invalid_argument(std::string("unknown escape \\") + raw[i]);
    }
  }
  return out;
}

std::vector<std::string> split_vars(std::string_view raw) {
  std::vector<std::string> fields;
  if (raw.empty()) return fields;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] == ',') {
      fields.push_back(unescape(raw.substr(begin, i - begin)));
      begin = i + 1;
    } else if (raw[i] == '\\') {
      ++i;
    }
  }
  return fields;
}

std::string escape(std::string_view raw) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (const char c : raw) {
    const auto byte = static_cast<unsigned char>(c);
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (byte < 0x20 || byte >= 0x7f) {
          out += "\\x";
          out.push_back(kHex[byte >> 4]);
          out.push_back(kHex[byte & 0xf]);
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::vector<std::string> parse_query_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t begin = 0;
  while (begin < content.size()) {
    const std::size_t nl = content.find('\n', begin);
    if (nl == std::string_view::npos) {
      lines.emplace_back(content.substr(begin));
      break;
    }
    lines.emplace_back(content.substr(begin, nl - begin));
    begin = nl + 1;
  }
  return lines;
}

std::vector<std::string> parse_query_records(std::string_view content) {
  std::vector<std::string> records;
  std::size_t pos = 0;
  while (pos < content.size()) {
    if (content.size() - pos < 4) throw std::runtime_error("truncated length prefix");
    std::uint32_t len = 0;
    for (int b = 3; b >= 0; --b) len = (len << 8) | static_cast<unsigned char>(content[pos + static_cast<std::size_t>(b)]);
    pos += 4;
    if (content.size() - pos < len) throw std::runtime_error("truncated record");
    records.emplace_back(content.substr(pos, len));
    pos += len;
  }
  return records;
}

std::string generate_text(Generator generator, std::int64_t size, int alphabet, std::uint64_t seed) {
  std::string text(static_cast<std::size_t>(size), 'a');
  switch (generator) {
    case Generator::kRandom: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(0, alphabet - 1);
      for (char& c : text) c = static_cast<char>('a' + pick(rng));
      break;
    }
    case Generator::kPeriodic:
      for (std::size_t i = 0; i < text.size(); ++i) {
        text[i] = static_cast<char>('a' + static_cast<int>(i % static_cast<std::size_t>(std::max(alphabet, 2))));
      }
      break;
    case Generator::kUnary:
      break;
  }
  return text;
}

std::optional<double> fit_loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& row : rows) {
    const double x = std::log(static_cast<double>(row.size));
    const double y = std::log(std::max(row.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(rows.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchReport run_bench(const BenchOptions& options) {
  if (!std::is_sorted(options.sizes.begin(), options.sizes.end(), std::less_equal<>{})) {
    throw std::invalid_argument("bench sizes must be strictly increasing");
  }

  BenchReport report;
  for (const std::int64_t size : options.sizes) {
    const std::string bytes = generate_text(options.generator, size, options.alphabet, options.seed);
    const Text text(bytes);

    // Query strings sampled from the text so most of them hit.
    std::mt19937_64 rng(options.seed ^ static_cast<std::uint64_t>(size));
    auto sample = [&](std::int64_t max_len) {
      std::uniform_int_distribution<std::int64_t> len_dist(1, std::min<std::int64_t>(max_len, std::max<std::int64_t>(size, 1)));
      const std::int64_t len = size == 0 ? 0 : len_dist(rng);
      std::uniform_int_distribution<std::int64_t> start_dist(0, std::max<std::int64_t>(size - len, 0));
      return bytes.substr(static_cast<std::size_t>(start_dist(rng)), static_cast<std::size_t>(len));
    };
    CountQuery query;
    for (int i = 0; i < options.prefixes; ++i) query.prefixes.push_back(sample(8));
    query.suffix = sample(2);

    BenchRow row{size, 0, 0};
    double best = -1;
    for (int r = 0; r < std::max(options.repeats, 1); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      std::int64_t answers = 0;
      if (options.listing) {
        for (const auto& list : list_all(text, query.prefixes, query.suffix).lists) {
          answers += static_cast<std::int64_t>(list.size());
        }
      } else {
        for (const std::int64_t c : count_all(text, query).counts) answers += c;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (best < 0 || secs < best) best = secs;
      row.answers = answers;
    }
    row.seconds = best;
    report.rows.push_back(row);
  }
  report.slope = fit_loglog_slope(report.rows);
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix/suffix constrained unique-substring queries"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, Mode>> modes = {
      {"count-mps", Mode::kCountMps},
      {"list-mps", Mode::kListMps},
      {"count-spm", Mode::kCountSpm},
      {"list-spm", Mode::kListSpm},
  };
  QueryArgs query_args;
  std::vector<std::pair<CLI::App*, Mode>> query_commands;
  for (const auto& [name, mode] : modes) {
    const bool mps = mode == Mode::kCountMps || mode == Mode::kListMps;
    const bool listing = mode == Mode::kListMps || mode == Mode::kListSpm;
    auto* sub = app.add_subcommand(name, mps ? "Many prefixes, one suffix (--fixed is the suffix)"
                                             : "One prefix, many suffixes (--fixed is the prefix)");
    add_query_options(*sub, query_args, listing);
    query_commands.emplace_back(sub, mode);
  }

  QueryArgs dump_args;
  auto* dump = app.add_subcommand("dump", "Print SO/CSO/NextSO rows and the suffix tree in DOT");
  dump->add_option("text_file", dump_args.text_path, "File holding the text (raw bytes)");
  dump->add_option("--text", dump_args.inline_text, "Literal text instead of a file");
  dump->add_option("--suffix", dump_args.fixed, "Suffix string for the occurrence arrays");

  BenchOptions bench_options;
  int min_exp = 14;
  int max_exp = 20;
  std::string generator = "random";
  auto* bench = app.add_subcommand("bench", "Time the pipeline over a size ladder and fit a log-log slope");
  bench->add_option("--sizes", bench_options.sizes, "Explicit sizes (overrides the exponent ladder)");
  bench->add_option("--min-exp", min_exp, "Smallest size as a power of two")->check(CLI::Range(0, 30));
  bench->add_option("--max-exp", max_exp, "Largest size as a power of two")->check(CLI::Range(0, 30));
  bench->add_option("--alphabet", bench_options.alphabet, "Alphabet size")->check(CLI::Range(1, 256));
  bench->add_option("--generator", generator, "random | periodic | unary")
      ->check(CLI::IsMember({"random", "periodic", "unary"}));
  bench->add_flag("--list", bench_options.listing, "Time listing instead of counting");
  bench->add_option("--repeats", bench_options.repeats, "Runs per size; the fastest is kept")->check(CLI::PositiveNumber);
  bench->add_option("--prefixes", bench_options.prefixes, "Query strings per run")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bench_options.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, mode] : query_commands) {
      if (sub->parsed()) run_query(mode, query_args, out);
    }
    if (dump->parsed()) dump_index(dump_args, out);
    if (bench->parsed()) {
      if (bench_options.sizes.empty()) {
        for (int k = min_exp; k <= max_exp; ++k) bench_options.sizes.push_back(std::int64_t{1} << k);
      }
      bench_options.generator = generator == "unary"      ? Generator::kUnary
                                : generator == "periodic" ? Generator::kPeriodic
                                                          : Generator::kRandom;
      const BenchReport report = run_bench(bench_options);
      out << "size\tseconds\tanswers\n";
      for (const BenchRow& row : report.rows) out << row.size << '\t' << row.seconds << '\t' << row.answers << '\n';
      if (report.slope) {
        out << "slope\t" << *report.slope << '\n';
      } else {
        out << "slope\tn/a\n";
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace psquery::cli
