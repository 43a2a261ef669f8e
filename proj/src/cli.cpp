#include "chaobell/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "chaobell/errors.hpp"
#include "chaobell/inequality.hpp"
#include "chaobell/montecarlo.hpp"
#include "chaobell/oracle.hpp"
#include "chaobell/photon_stats.hpp"
#include "chaobell/polarizer.hpp"
#include "chaobell/rng.hpp"
#include "chaobell/source_model.hpp"

namespace chaobell::cli {
namespace {

using nlohmann::ordered_json;
using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  ordered_json config = ordered_json::object();
  Table table;
  ordered_json summary = ordered_json::object();
  std::vector<std::string> summary_lines;
};

struct OutputOptions {
  std::string path;
  std::string format = "csv";
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

enum class AngleUnit { degrees, radians };

// Splits a trailing "deg"/"rad" suffix off `text`.
std::optional<AngleUnit> split_unit(std::string_view& text) {
  text = trim(text);
  auto ends_with = [&](std::string_view suffix) {
    return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
  };
  if (ends_with("rad")) {
    text.remove_suffix(3);
    return AngleUnit::radians;
  }
  if (ends_with("deg")) {
    text.remove_suffix(3);
    return AngleUnit::degrees;
  }
  return std::nullopt;
}

double to_radians(double value, AngleUnit unit) {
  // value / 180 first: 45, 90, 22.5 and 67.5 degrees land exactly on the
  // double multiples of pi.
  return unit == AngleUnit::radians ? value : (value / 180.0) * kPi;
}

std::vector<double> parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 3) {
    throw UsageError("range must be start:stop:count, got '" + std::string(text) + "'");
  }
  const AngleUnit range_unit = split_unit(parts[2]).value_or(AngleUnit::degrees);
  auto endpoint = [&](std::string_view p) {
    const AngleUnit unit = split_unit(p).value_or(range_unit);
    return std::pair{parse_number(p), unit};
  };
  const auto [lo, lo_unit] = endpoint(parts[0]);
  const auto [hi, hi_unit] = endpoint(parts[1]);
  const double count_value = parse_number(parts[2]);
  if (count_value < 1.0 || count_value != std::floor(count_value) || count_value > 1e7) {
    throw UsageError("range count must be a positive integer");
  }
  const auto count = static_cast<std::size_t>(count_value);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Interpolate in the input unit so degree grids stay exact.
    if (lo_unit == hi_unit) {
      const double v = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
      out.push_back(to_radians(v, lo_unit));
    } else {
      const double a = to_radians(lo, lo_unit);
      const double b = to_radians(hi, hi_unit);
      out.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
  }
  return out;
}

ordered_json json_number(double value) {
  if (!std::isfinite(value)) {
    return nullptr;
  }
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string render_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_number(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(cell);
}

ordered_json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return json_number(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return *i;
  }
  return std::get<std::string>(cell);
}

void write_table(const Report& report, const std::string& format, std::ostream& os) {
  if (format == "json") {
    ordered_json doc;
    doc["config"] = report.config;
    doc["rows"] = ordered_json::array();
    for (const auto& row : report.table.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        obj[report.table.columns[i]] = cell_json(row[i]);
      }
      doc["rows"].push_back(std::move(obj));
    }
    doc["summary"] = report.summary;
    os << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
    os << (i ? "," : "") << report.table.columns[i];
  }
  os << '\n';
  for (const auto& row : report.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << render_cell(row[i]);
    }
    os << '\n';
  }
}

int emit(const Report& report, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  std::ostream* summary = &err;
  if (opts.path.empty()) {
    write_table(report, opts.format, out);
  } else {
    std::ofstream file(opts.path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file " << opts.path << '\n';
      return kExitInternal;
    }
    write_table(report, opts.format, file);
    if (!file.flush()) {
      err << "error: failed writing " << opts.path << '\n';
      return kExitInternal;
    }
    summary = &out;
  }
  for (const auto& line : report.summary_lines) {
    *summary << line << '\n';
  }
  return kExitOk;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
  }
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("seed must be an unsigned integer or 'random', got '" + text + "'");
  }
  return seed;
}

CountMode parse_mode(const std::string& text) {
  if (text == "intensity") return CountMode::intensity_only;
  if (text == "poisson") return CountMode::independent_poisson;
  if (text == "matched") return CountMode::matched_pairs;
  throw UsageError("mode must be intensity, poisson or matched");
}

unsigned resolve_lanes(unsigned threads) {
  if (threads == 0) {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  return threads;
}

// Flags shared by the Monte Carlo subcommands.
struct ExperimentFlags {
  std::uint64_t trials = 1'000'000;
  double mean_intensity = 1.0;
  std::string seed = std::to_string(kDefaultSeed);
  std::string mode = "poisson";
  bool postselect = false;
  unsigned threads = 1;
  OutputOptions output;

  void attach(CLI::App& app) {
    app.add_option("--trials", trials, "Observation windows per setting")->check(CLI::PositiveNumber);
    app.add_option("--mean-intensity", mean_intensity, "Mean counts per window per polarization")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Unsigned seed, or 'random'");
    app.add_option("--mode", mode, "intensity | poisson | matched")
        ->check(CLI::IsMember({"intensity", "poisson", "matched"}));
    app.add_flag("--postselect", postselect, "Keep only windows with one photon per side");
    app.add_option("--threads", threads, "Execution lanes (0 = all cores); results do not depend on it");
    app.add_option("--output,-o", output.path, "Write the table to this file");
    app.add_option("--format", output.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }

  SimConfig config() const {
    SimConfig c;
    c.trials = trials;
    c.mean_intensity = mean_intensity;
    c.seed = parse_seed(seed);
    c.count_mode = parse_mode(mode);
    c.postselect_single_pairs = postselect;
    if (postselect && c.count_mode == CountMode::intensity_only) {
      throw UsageError("--postselect needs --mode poisson or matched");
    }
    c.validate();
    return c;
  }

  ordered_json describe(const SimConfig& c) const {
    ordered_json j;
    j["trials"] = c.trials;
    j["mean_intensity"] = json_number(c.mean_intensity);
    j["seed"] = c.seed;
    j["count_mode"] = std::string(to_string(c.count_mode));
    j["postselect_single_pairs"] = c.postselect_single_pairs;
    return j;
  }
};

std::string fmt_line(const char* label, double value) { return std::string(label) + format_number(value); }

// --- sweep -----------------------------------------------------------------

struct SweepCommand {
  ExperimentFlags flags;
  std::string deltas;
  std::string theta2 = "0";

  void attach(CLI::App& app) {
    flags.attach(app);
    app.add_option("--deltas", deltas, "theta1 - theta2 values, e.g. 0:90:13deg or 0,22.5,45")->required();
    app.add_option("--theta2", theta2, "Side-2 analyzer angle held fixed during the sweep");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const auto list = parse_angle_list(deltas);
    SimConfig config = flags.config();
    config.theta2 = parse_angle(theta2);
    const auto rows = sweep_angles(config, list, resolve_lanes(flags.threads));

    Report report;
    report.config = flags.describe(config);
    report.config["theta2_radians"] = json_number(config.theta2);
    report.table.columns = {"delta_radians", "estimate", "std_error", "oracle", "abs_deviation"};
    if (config.postselect_single_pairs) {
      for (const char* c : {"trials_selected", "n1n_2n", "n1n_2p", "n1p_2n", "n1p_2p"}) {
        report.table.columns.emplace_back(c);
      }
    }
    double max_dev = 0.0;
    for (const auto& row : rows) {
      const double dev = std::fabs(row.measured.estimate - row.oracle);
      max_dev = std::max(max_dev, dev);
      std::vector<Cell> cells{row.delta, row.measured.estimate, row.measured.std_error, row.oracle, dev};
      if (row.measured.tally) {
        const auto& t = *row.measured.tally;
        for (const auto v : {t.trials_selected, t.n1n_2n, t.n1n_2p, t.n1p_2n, t.n1p_2p}) {
          cells.emplace_back(static_cast<std::int64_t>(v));
        }
      }
      report.table.rows.push_back(std::move(cells));
    }
    report.summary["points"] = rows.size();
    report.summary["max_abs_deviation"] = json_number(max_dev);
    report.summary_lines.push_back("points: " + std::to_string(rows.size()));
    report.summary_lines.push_back(fmt_line("max_abs_deviation: ", max_dev));
    return emit(report, flags.output, out, err);
  }
};

// --- chsh ------------------------------------------------------------------

struct ChshCommand {
  ExperimentFlags flags;
  std::string angles = "0,45,22.5,67.5";

  void attach(CLI::App& app) {
    flags.attach(app);
    app.add_option("--angles", angles, "a,a',b,b' (side-1 pair then side-2 pair)");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const auto list = parse_angle_list(angles);
    if (list.size() != 4) {
      throw UsageError("--angles needs exactly four values, got " + std::to_string(list.size()));
    }
    const SimConfig config = flags.config();
    const auto est = chsh_experiment(config, list[0], list[1], list[2], list[3], resolve_lanes(flags.threads));
    const double oracle_s = chsh_value(list[0], list[1], list[2], list[3], normalized_correlation);

    Report report;
    report.config = flags.describe(config);
    report.config["angles_radians"] = {json_number(list[0]), json_number(list[1]), json_number(list[2]),
                                       json_number(list[3])};
    report.table.columns = {"setting", "theta1_radians", "theta2_radians", "delta_radians",
                            "estimate", "std_error", "oracle"};
    const std::array<const char*, 4> names{"a,b", "a,b'", "a',b", "a',b'"};
    const std::array<std::pair<double, double>, 4> pairs{
        {{list[0], list[2]}, {list[0], list[3]}, {list[1], list[2]}, {list[1], list[3]}}};
    for (std::size_t i = 0; i < 4; ++i) {
      report.table.rows.push_back({std::string(names[i]), pairs[i].first, pairs[i].second, est.deltas[i],
                                   est.points[i].estimate, est.points[i].std_error,
                                   normalized_correlation(est.deltas[i])});
    }
    report.summary["s_estimate"] = json_number(est.s);
    report.summary["s_std_error"] = json_number(est.std_error);
    report.summary["s_oracle"] = json_number(oracle_s);
    report.summary["s_abs_deviation"] = json_number(std::fabs(est.s - oracle_s));
    report.summary_lines.push_back(fmt_line("S: ", est.s));
    report.summary_lines.push_back(fmt_line("std_error: ", est.std_error));
    report.summary_lines.push_back(fmt_line("oracle_S: ", oracle_s));
    return emit(report, flags.output, out, err);
  }
};

// --- dist-check ------------------------------------------------------------

struct DistCheckCommand {
  double mean_intensity = 1.0;
  std::uint64_t samples = 1'000'000;
  double threshold = 0.005;
  std::string seed = std::to_string(kDefaultSeed);
  OutputOptions output;

  void attach(CLI::App& app) {
    app.add_option("--mean-intensity", mean_intensity, "Mean intensity of the exponential source")
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", samples, "Number of two-stage draws")->check(CLI::PositiveNumber);
    app.add_option("--threshold", threshold, "Pass if total-variation distance is below this")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Unsigned seed, or 'random'");
    app.add_option("--output,-o", output.path, "Write the table to this file");
    app.add_option("--format", output.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }

  int run(std::ostream& out, std::ostream& err) const {
    const std::uint64_t s = parse_seed(seed);
    const auto check = check_count_marginal(mean_intensity, samples, s);
    const bool pass = check.total_variation < threshold;

    Report report;
    report.config["mean_intensity"] = json_number(mean_intensity);
    report.config["samples"] = samples;
    report.config["threshold"] = json_number(threshold);
    report.config["seed"] = s;
    report.table.columns = {"n", "observed", "empirical", "analytic", "abs_diff"};
    for (const auto& row : check.rows) {
      report.table.rows.push_back({static_cast<std::int64_t>(row.n), static_cast<std::int64_t>(row.observed),
                                   row.empirical, row.analytic, std::fabs(row.empirical - row.analytic)});
    }
    report.summary["total_variation"] = json_number(check.total_variation);
    report.summary["sample_mean"] = json_number(check.sample_mean);
    report.summary["mean_std_error"] = json_number(check.mean_std_error);
    report.summary["pass"] = pass;
    report.summary_lines.push_back(fmt_line("total_variation: ", check.total_variation));
    report.summary_lines.push_back(fmt_line("sample_mean: ", check.sample_mean));
    report.summary_lines.push_back(pass ? "PASS" : "FAIL");
    const int code = emit(report, output, out, err);
    return code != kExitOk ? code : (pass ? kExitOk : kExitThreshold);
  }
};

// --- bell-datasets ---------------------------------------------------------

struct BellDatasetsCommand {
  std::string input;
  std::size_t random_count = 0;
  std::size_t length = 1000;
  std::string seed = std::to_string(kDefaultSeed);
  OutputOptions output;

  void attach(CLI::App& app) {
    app.add_option("--input", input, "File with 3 or 4 lines of +1/-1 values");
    app.add_option("--random", random_count, "Generate this many random sequences (3 or 4)");
    app.add_option("--len", length, "Length of generated sequences")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Unsigned seed, or 'random'");
    app.add_option("--output,-o", output.path, "Write the table to this file");
    app.add_option("--format", output.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }

  std::vector<SignSequence> load(std::uint64_t s) const {
    if (!input.empty() && random_count != 0) {
      throw UsageError("use either --input or --random, not both");
    }
    if (!input.empty()) {
      std::ifstream file(input);
      if (!file) {
        throw UsageError("cannot read " + input);
      }
      return parse_sign_sequences(file);
    }
    if (random_count == 0) {
      throw UsageError("need --input FILE or --random N");
    }
    std::vector<SignSequence> out;
    for (std::size_t k = 0; k < random_count; ++k) {
      RandomStream rng(s, k);
      std::vector<int> values(length);
      for (auto& v : values) {
        v = (rng() >> 63) ? 1 : -1;
      }
      out.emplace_back(std::move(values));
    }
    return out;
  }

  int run(std::ostream& out, std::ostream& err) const {
    const std::uint64_t s = parse_seed(seed);
    const auto seqs = load(s);
    if (seqs.size() != 3 && seqs.size() != 4) {
      throw UsageError("need 3 or 4 sequences, got " + std::to_string(seqs.size()));
    }
    Report report;
    report.config["sequences"] = seqs.size();
    report.config["length"] = seqs.front().size();
    report.config["source"] = input.empty() ? "random" : input;
    if (input.empty()) {
      report.config["seed"] = s;
    }
    report.table.columns = {"term", "rational", "decimal"};
    auto add = [&](const std::string& term, const Rational& r) {
      report.table.rows.push_back({term, r.to_string(), r.to_double()});
    };
    InequalityReport result;
    if (seqs.size() == 3) {
      result = bell_three_check(seqs[0], seqs[1], seqs[2]);
      add("C(a,b)", cross_correlation(seqs[0], seqs[1]));
      add("C(a,c)", cross_correlation(seqs[0], seqs[2]));
      add("C(b,c)", cross_correlation(seqs[1], seqs[2]));
      report.summary["inequality"] = "|C(a,b) - C(a,c)| <= 1 - C(b,c)";
    } else {
      result = chsh_four_check(seqs[0], seqs[1], seqs[2], seqs[3]);
      add("C(a,b)", cross_correlation(seqs[0], seqs[2]));
      add("C(a,b')", cross_correlation(seqs[0], seqs[3]));
      add("C(a',b)", cross_correlation(seqs[1], seqs[2]));
      add("C(a',b')", cross_correlation(seqs[1], seqs[3]));
      report.summary["inequality"] = "|C(a,b) - C(a,b')| + |C(a',b) + C(a',b')| <= 2";
    }
    add("lhs", result.lhs);
    add("bound", result.bound);
    add("margin", result.margin);
    report.summary["lhs"] = result.lhs.to_string();
    report.summary["bound"] = result.bound.to_string();
    report.summary["margin"] = result.margin.to_string();
    report.summary["satisfied"] = result.satisfied;
    report.summary_lines.push_back("lhs: " + result.lhs.to_string());
    report.summary_lines.push_back("bound: " + result.bound.to_string());
    report.summary_lines.push_back("margin: " + result.margin.to_string());
    report.summary_lines.push_back(std::string("satisfied: ") + (result.satisfied ? "true" : "false"));
    const int code = emit(report, output, out, err);
    return code != kExitOk ? code : (result.satisfied ? kExitOk : kExitThreshold);
  }
};

// --- demo-noncommute -------------------------------------------------------

struct DemoCommand {
  std::optional<std::string> angles;
  std::string input_pol = "0";
  double intensity = 1.0;
  OutputOptions output;

  void attach(CLI::App& app) {
    app.add_option("--angles", angles, "Polarizer axes in the order the light meets them");
    app.add_option("--input-pol", input_pol, "Polarization angle of the input light");
    app.add_option("--intensity", intensity, "Input intensity")->check(CLI::NonNegativeNumber);
    app.add_option("--output,-o", output.path, "Write the table to this file");
    app.add_option("--format", output.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }

  int run(std::ostream& out, std::ostream& err) const {
    const double pol = parse_angle(input_pol);
    std::vector<std::vector<double>> orders;
    std::vector<std::string> labels;
    if (!angles) {
      orders = {{to_radians(45, AngleUnit::degrees), to_radians(90, AngleUnit::degrees)},
                {to_radians(90, AngleUnit::degrees), to_radians(45, AngleUnit::degrees)}};
      labels = {"45deg;90deg", "90deg;45deg"};
    } else {
      orders.push_back(trim(*angles).empty() ? std::vector<double>{} : parse_angle_list(*angles));
      std::string label(trim(*angles));
      std::replace(label.begin(), label.end(), ',', ';');  // keep the CSV cell unquoted
      labels.push_back(std::move(label));
    }
    Report report;
    report.config["input_polarization_radians"] = json_number(pol);
    report.config["input_intensity"] = json_number(intensity);
    report.table.columns = {"order", "transmitted"};
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const double t = sequential_polarizers(pol, intensity, orders[i]);
      report.table.rows.push_back({labels[i], t});
      report.summary_lines.push_back("[" + labels[i] + "] -> " + format_number(t));
    }
    report.summary["orderings"] = orders.size();
    return emit(report, output, out, err);
  }
};

}  // namespace

double parse_angle(std::string_view text) {
  const AngleUnit unit = split_unit(text).value_or(AngleUnit::degrees);
  return to_radians(parse_number(text), unit);
}

std::vector<double> parse_angle_list(std::string_view text) {
  if (trim(text).empty()) {
    throw UsageError("angle list is empty");
  }
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    const auto item = trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (item.empty()) {
      throw UsageError("empty entry in angle list '" + std::string(text) + "'");
    }
    if (item.find(':') != std::string_view::npos) {
      const auto range = parse_range(item);
      out.insert(out.end(), range.begin(), range.end());
    } else {
      out.push_back(parse_angle(item));
    }
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) {
    return "0";  // no "-0"
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaotic-light Bell correlation simulator", "chaobell"};
  app.require_subcommand(1);

  SweepCommand sweep;
  ChshCommand chsh;
  DistCheckCommand dist;
  BellDatasetsCommand bell;
  DemoCommand demo;
  sweep.attach(*app.add_subcommand("sweep", "Normalized correlation over a list of angle differences"));
  chsh.attach(*app.add_subcommand("chsh", "CHSH value from four analyzer settings"));
  dist.attach(*app.add_subcommand("dist-check", "Two-stage count law against the Bose-Einstein pmf"));
  bell.attach(*app.add_subcommand("bell-datasets", "Exact Bell/CHSH check on +1/-1 data sets"));
  demo.attach(*app.add_subcommand("demo-noncommute", "Order dependence of sequential polarizers"));

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    argv.push_back(*it);  // CLI11 consumes a reversed vector
  }
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("sweep")) return sweep.run(out, err);
    if (app.got_subcommand("chsh")) return chsh.run(out, err);
    if (app.got_subcommand("dist-check")) return dist.run(out, err);
    if (app.got_subcommand("bell-datasets")) return bell.run(out, err);
    if (app.got_subcommand("demo-noncommute")) return demo.run(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace chaobell::cli
