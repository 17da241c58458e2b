#include "gridhfk/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridhfk/error.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/records.hpp"
#include "gridhfk/verify.hpp"

namespace gridhfk::cli {
namespace {

const std::vector<std::string> kVerbs = {"validate", "info",     "homology", "hfk",
                                         "unknot",   "genus",    "fibered",  "alexander",
                                         "verify",   "move",     "random"};

enum class Format { text, records };

struct Options {
  std::string verb;
  std::string path;
  std::string inline_grid;
  Format format = Format::text;
  int jobs = 1;
  int max_n = 10;
  std::uint64_t seed = 0;
  int size = 0;
  bool knots_only = false;
  std::string move;
  bool verbose = false;
};

bool needs_homology(const std::string& verb) {
  return verb == "homology" || verb == "hfk" || verb == "unknot" || verb == "genus" ||
         verb == "fibered" || verb == "alexander" || verb == "verify";
}

std::string factorial_string(int n) {
  // n <= kMaxGridSize keeps this in range.
  unsigned long long f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
  return std::to_string(f);
}

GridMove parse_move(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::SyntaxError, "--move expects KIND:INDEX, got '" + text + "'");
  }
  GridMove move;
  move.kind = parse_move_kind(text.substr(0, colon));
  const std::string index = text.substr(colon + 1);
  try {
    std::size_t used = 0;
    move.index = std::stoi(index, &used);
    if (used != index.size()) throw std::invalid_argument(index);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::SyntaxError, "--move index '" + index + "' is not an integer");
  }
  return move;
}

std::string read_input(const Options& opts, std::istream& in) {
  if (!opts.inline_grid.empty() && !opts.path.empty()) {
    throw Error(ErrorKind::SyntaxError, "give either an input path or --grid, not both");
  }
  if (!opts.inline_grid.empty()) {
    // ';' may stand in for newlines on the command line.
    std::string text = opts.inline_grid;
    for (char& ch : text) {
      if (ch == ';') ch = '\n';
    }
    return text;
  }
  if (opts.path.empty()) {
    throw Error(ErrorKind::SyntaxError, "no input: give a grid file path, '-' or --grid");
  }
  std::ostringstream buffer;
  if (opts.path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(opts.path);
    if (!file) throw Error(ErrorKind::SyntaxError, "cannot read '" + opts.path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_ranks_text(std::ostream& out, const BigradedRanks& ranks, int n, int components) {
  out << "n: " << n << "\n";
  out << "components: " << components << "\n";
  out << "total_rank: " << ranks.total() << "\n";
  out << "# m s rank\n";
  for (auto it = ranks.ranks.rbegin(); it != ranks.ranks.rend(); ++it) {
    out << it->first.maslov << ' ' << it->first.alexander.str() << ' ' << it->second << "\n";
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Output for one grid. Throws gridhfk::Error for invalid input or alarms.
// Returns the exit status for non-exception failures (verify).
int process(const Options& opts, const GridDiagram& grid, std::ostream& out) {
  const int n = grid.size();
  const bool records = opts.format == Format::records;
  const auto& verb = opts.verb;

  if (needs_homology(verb) && n > opts.max_n) {
    throw Error(ErrorKind::TooLarge,
                "grid size " + std::to_string(n) + " exceeds --max-n " +
                    std::to_string(opts.max_n) + "; the complex has n! = " + factorial_string(n) +
                    " generators and the cost grows factorially with n. Raise --max-n to proceed");
  }

  if (verb == "validate") {
    if (records) {
      out << records::dump(records::to_record(grid)) << "\n";
    } else {
      out << "valid: n=" << n << "\n";
    }
    return kExitOk;
  }
  if (verb == "info") {
    const auto summary = link_summary(grid);
    if (records) {
      out << records::dump(records::to_record(summary, n)) << "\n";
    } else {
      out << "n: " << n << "\n";
      out << "components: " << summary.component_count << "\n";
      out << "crossings: " << summary.crossing_count << "\n";
      out << "component_of_column:";
      for (int c : summary.component_of_column) out << ' ' << c;
      out << "\n";
    }
    return kExitOk;
  }
  if (verb == "move") {
    if (opts.move.empty()) throw Error(ErrorKind::SyntaxError, "move needs --move KIND:INDEX");
    const auto moved = apply_move(grid, parse_move(opts.move));
    if (records) {
      out << records::dump(records::to_record(moved)) << "\n";
    } else {
      out << serialize_grid(moved);
    }
    return kExitOk;
  }
  if (verb == "homology" || verb == "hfk") {
    const int components = component_count(grid);
    auto ranks = homology_ranks(grid, opts.jobs);
    if (verb == "hfk") ranks = hfk_hat(ranks, n, components);
    if (records) {
      out << records::dump(records::to_record(ranks, verb, n, components)) << "\n";
    } else {
      write_ranks_text(out, ranks, n, components);
    }
    return kExitOk;
  }
  if (verb == "verify") {
    const auto report = verify_grid(grid);
    if (records) {
      out << records::dump(records::to_record(report)) << "\n";
    } else {
      out << "n: " << n << "\n";
      out << "generators: " << report.generators << "\n";
      out << "tilde_terms: " << report.tilde_terms << "\n";
      out << "minus_terms: " << report.minus_terms << "\n";
      out << "rectangles: " << report.rectangles << "\n";
      out << "tilde_square_failures: " << report.tilde_square_failures << "\n";
      out << "minus_square_failures: " << report.minus_square_failures << "\n";
      out << "grading_failures: " << report.grading_failures << "\n";
      out << "index_failures: " << report.index_failures << "\n";
      out << "verify: " << (report.ok() ? "ok" : "FAILED") << "\n";
    }
    return report.ok() ? kExitOk : kExitInternalAlarm;
  }

  // Knot invariants.
  const auto report = knot_report(grid, opts.jobs);
  if (records) {
    records::Record r = {{"kind", verb}, {"n", n}};
    if (verb == "unknot") r["value"] = report.is_unknot;
    if (verb == "genus") r["value"] = report.genus;
    if (verb == "fibered") r["value"] = report.is_fibered;
    if (verb == "alexander") r["value"] = records::alexander_to_record(report.alexander);
    out << records::dump(r) << "\n";
  } else {
    if (verb == "unknot") out << "unknot: " << bool_text(report.is_unknot) << "\n";
    if (verb == "genus") out << "genus: " << report.genus << "\n";
    if (verb == "fibered") out << "fibered: " << bool_text(report.is_fibered) << "\n";
    if (verb == "alexander") out << "alexander: " << report.alexander.str() << "\n";
  }
  return kExitOk;
}

int exit_code_for(const Error& e) {
  return is_internal_alarm(e.kind()) ? kExitInternalAlarm : kExitInvalidInput;
}

void report_error(const Options& opts, std::ostream& out, std::ostream& err,
                  const std::string& kind, const std::string& message) {
  err << "error: " << message << "\n";
  if (opts.format == Format::records) {
    out << records::dump({{"kind", "error"}, {"error", kind}, {"message", message}}) << "\n";
  }
}

int run_random(const Options& opts, std::ostream& out) {
  if (opts.size <= 0) throw Error(ErrorKind::SyntaxError, "random needs --size N");
  std::mt19937_64 rng(opts.seed);
  const auto grid = random_grid(opts.size, rng, opts.knots_only);
  if (opts.format == Format::records) {
    out << records::dump(records::to_record(grid)) << "\n";
  } else {
    out << serialize_grid(grid);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Knot Floer homology from grid diagrams", "gridhfk"};
  app.add_option("verb", opts.verb, "What to compute")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("input", opts.path, "Grid file, or '-' for standard input");
  app.add_option("--grid", opts.inline_grid, "Inline grid text; ';' separates lines");
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--max-n", opts.max_n, "Largest grid size to compute homology for")
      ->check(CLI::Range(2, kMaxGridSize));
  app.add_option("--seed", opts.seed, "Seed for random");
  app.add_option("--size", opts.size, "Grid size for random")->check(CLI::Range(2, kMaxGridSize));
  app.add_flag("--knot", opts.knots_only, "random: only emit knots");
  app.add_option("--move", opts.move, "move: KIND:INDEX, e.g. stabilize:2");
  app.add_flag("-v,--verbose", opts.verbose, "Per-grid timing on standard error");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  opts.format = format == "records" ? Format::records : Format::text;

  try {
    if (opts.verb == "random") return run_random(opts, out);
  } catch (const Error& e) {
    report_error(opts, out, err, std::string(to_string(e.kind())), e.what());
    return exit_code_for(e);
  }

  std::vector<GridDiagram> grids;
  try {
    grids = parse_grid_batch(read_input(opts, in));
    if (grids.empty()) throw Error(ErrorKind::SyntaxError, "input contains no grid");
  } catch (const Error& e) {
    report_error(opts, out, err, std::string(to_string(e.kind())), e.what());
    return exit_code_for(e);
  }

  // Batch entries run in input order; each grid may use all workers.
  int status = kExitOk;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (i > 0 && opts.format == Format::text) out << "\n";
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
      code = process(opts, grids[i], out);
    } catch (const Error& e) {
      report_error(opts, out, err, std::string(to_string(e.kind())), e.what());
      code = exit_code_for(e);
    } catch (const std::exception& e) {
      report_error(opts, out, err, "InternalError", std::string("InternalError: ") + e.what());
      code = kExitInternalAlarm;
    }
    if (opts.verbose) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      err << "grid " << (i + 1) << ": n=" << grids[i].size() << ", " << elapsed.count() << " s\n";
    }
    status = std::max(status, code);
  }
  return status;
}

}  // namespace gridhfk::cli
