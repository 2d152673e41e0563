#pragma once

// Command-line front end. run() is the whole program; tools/l21.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 ok, 1 malformed input, 2 capacity or budget exceeded,
// 3 verification failed, 4 witness not found, 5 refutation found.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l21/digraph.hpp"
#include "l21/error.hpp"
#include "l21/explorer.hpp"
#include "l21/io.hpp"
#include "l21/lattice.hpp"
#include "l21/solver.hpp"

namespace l21::cli {

inline int default_jobs() {
  const char* env = std::getenv("L21_JOBS");
  if (!env || !*env) return 1;
  try {
    int jobs = std::stoi(env);
    if (jobs < 1) throw InvalidArgument("L21_JOBS must be a positive integer");
    return jobs;
  } catch (const std::logic_error&) {
    throw InvalidArgument(std::string("L21_JOBS must be a positive integer, got '") + env + "'");
  }
}

namespace detail {

struct Options {
  std::string kind, patch, orient, input, labels, name, format = "json";
  std::optional<std::uint64_t> random_seed;
  std::optional<long long> budget;
  std::optional<int> jobs;
  bool no_reversal = false;
  int dipath = 0, lambda = 0, max_hex = 2;
  std::vector<std::string> graphs;
};

inline const OrientedGraph& require_oriented(const io::Document& doc, const std::string& path) {
  if (!doc.oriented) throw InvalidArgument("'" + path + "' has no \"arcs\"; an oriented grid is required");
  return *doc.oriented;
}

inline Labeling load_labels(const std::string& spec, int n) {
  std::ifstream probe(spec);
  if (probe) return io::parse_labels_csv(io::read_file(spec), n);
  if (spec.find_first_not_of("0123456789, ") == std::string::npos) return io::parse_labels_inline(spec, n);
  throw InvalidArgument("cannot open labels file '" + spec + "'");
}

inline void emit(std::ostream& out, const io::Json& j) { out << io::dump(j) << std::flush; }

inline int cmd_gen(const Options& o, std::ostream& out) {
  auto kind = parse_kind(o.kind);
  auto grid = std::make_shared<const Grid>(patch(kind, o.patch));
  if (!o.orient.empty() && o.random_seed) throw InvalidArgument("--orient and --random are exclusive");
  if (!o.orient.empty()) {
    emit(out, io::document_json(orient(grid, Orientation::parse(o.orient))));
  } else if (o.random_seed) {
    if (grid->edge_count() > Orientation::kMaxEdges) throw CapacityError("too many edges for a random orientation");
    std::mt19937_64 rng(*o.random_seed);
    emit(out, io::document_json(orient(grid, Orientation(rng(), grid->edge_count()))));
  } else {
    emit(out, io::grid_json(*grid));
  }
  return 0;
}

// An unoriented grid is solved for its undirected labeling number.
inline int cmd_solve(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.input);
  try {
    auto result = doc.oriented ? solve_lambda(*doc.oriented, o.budget) : solve_lambda_undirected(*doc.grid, o.budget);
    emit(out, io::solve_json(result));
  } catch (const BudgetExhausted& e) {
    emit(out, io::budget_json(e));
    throw;
  }
  return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.input);
  const auto& d = require_oriented(doc, o.input);
  auto violations = verify(d, load_labels(o.labels, d.size()));
  emit(out, io::violations_json(violations));
  return violations.empty() ? 0 : static_cast<int>(ExitCode::verification_failed);
}

inline int cmd_metrics(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.input);
  emit(out, io::metrics_json(require_oriented(doc, o.input)));
  return 0;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.input);
  SweepOptions opts;
  opts.include_reversal = !o.no_reversal;
  opts.jobs = o.jobs.value_or(default_jobs());
  opts.budget_per_solve = o.budget;
  auto summary = enumerate_orientations(doc.grid, opts);
  if (o.format == "text")
    out << io::sweep_text(summary) << std::flush;
  else
    emit(out, io::sweep_json(summary));
  return 0;
}

inline int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = io::load_document(o.input);
  auto found = find_witness(doc.grid, o.dipath, o.lambda);
  if (!found) {
    err << "no orientation with longest dipath " << o.dipath << " and lambda " << o.lambda << "\n";
    return static_cast<int>(ExitCode::not_found);
  }
  emit(out, io::document_json(found->graph));
  return 0;
}

inline std::vector<Girth5Input> girth5_inputs(const std::vector<std::string>& files) {
  if (files.empty()) return default_girth5_inputs();
  std::vector<Girth5Input> inputs;
  for (const auto& f : files) {
    auto text = io::read_file(f);
    auto doc = io::parse_document(text);
    auto j = io::Json::parse(text);
    if (j.contains("planar") && !j["planar"].is_boolean()) throw InvalidArgument("'planar' must be true or false");
    const bool planar = !j.contains("planar") || j["planar"].get<bool>();
    if (doc.oriented)
      inputs.emplace_back(*doc.oriented, planar);
    else
      inputs.emplace_back(doc.grid, planar);
  }
  return inputs;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const int jobs = o.jobs.value_or(default_jobs());
  const int refuted = static_cast<int>(ExitCode::refutation);
  if (o.name == "square-center") {
    auto r = check_square_center_property();
    emit(out, io::report_json(r));
    return r.confirmed() ? 0 : refuted;
  }
  if (o.name == "tri-wheel") {
    auto r = check_triangular_wheel_classes();
    emit(out, io::report_json(r));
    return r.confirmed() ? 0 : refuted;
  }
  if (o.name == "dist2-lemma") {
    auto r = check_dist2_lemma();
    emit(out, io::report_json(r));
    return r.confirmed() ? 0 : refuted;
  }
  if (o.name == "hex-conjecture") {
    auto r = check_hexagonal_conjecture(o.max_hex, jobs);
    emit(out, io::report_json(r));
    return r.supported() ? 0 : refuted;
  }
  if (o.name == "girth5") {
    Girth5Options opts;
    opts.jobs = jobs;
    if (o.random_seed) opts.seed = *o.random_seed;
    auto r = check_girth5_conjecture(girth5_inputs(o.graphs), opts);
    emit(out, io::report_json(r));
    return r.supported() ? 0 : refuted;
  }
  throw InvalidArgument("unknown check '" + o.name + "'");
}

inline int cmd_summary_table(const Options& o, std::ostream& out) {
  auto r = summary_table(o.jobs.value_or(default_jobs()));
  if (o.format == "json")
    emit(out, io::report_json(r));
  else
    out << io::table_text(r) << std::flush;
  return 0;
}

inline int cmd_export_dot(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.input);
  const auto& d = require_oriented(doc, o.input);
  if (o.labels.empty()) {
    out << io::to_dot(d) << std::flush;
  } else {
    auto f = load_labels(o.labels, d.size());
    out << io::to_dot(d, &f) << std::flush;
  }
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Oriented L(2,1)-labeling of grids and small digraphs", "l21"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Print a built-in patch as a grid document, optionally oriented");
  gen->add_option("--kind", o.kind, "square | triangular | hexagonal | custom")->required();
  gen->add_option("--patch", o.patch, "patch spec, e.g. squareRect(3,3)")->required();
  gen->add_option("--orient", o.orient, "orientation bitstring, one bit per edge");
  gen->add_option("--random", o.random_seed, "seed for a random orientation");

  auto* solve = app.add_subcommand("solve", "Compute lambda with an optimal labeling");
  solve->add_option("--input", o.input, "grid document")->required();
  solve->add_option("--budget", o.budget, "maximum search nodes");

  auto* ver = app.add_subcommand("verify", "Check a labeling against the constraints");
  ver->add_option("--input", o.input, "oriented grid document")->required();
  ver->add_option("--labels", o.labels, "CSV of nodeIndex,color rows, or inline colors 1,3,0,2")->required();

  auto* met = app.add_subcommand("metrics", "Longest dipath, girth, bipartiteness and bounds");
  met->add_option("--input", o.input, "oriented grid document")->required();

  auto* en = app.add_subcommand("enumerate", "Sweep all orientations up to symmetry");
  en->add_option("--input", o.input, "grid document")->required();
  en->add_flag("--no-reversal", o.no_reversal, "do not identify an orientation with its reverse");
  en->add_option("--jobs", o.jobs, "worker threads (default $L21_JOBS or 1)")->check(CLI::PositiveNumber);
  en->add_option("--budget", o.budget, "maximum search nodes per class");
  en->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* wit = app.add_subcommand("witness", "Find an orientation with a given longest dipath and lambda");
  wit->add_option("--input", o.input, "grid document")->required();
  wit->add_option("--dipath", o.dipath, "longest dipath length")->required();
  wit->add_option("--lambda", o.lambda, "target lambda")->required();

  auto* chk = app.add_subcommand("check", "Run a claim check");
  chk->add_option("--name", o.name, "check name")
      ->required()
      ->check(CLI::IsMember({"square-center", "tri-wheel", "dist2-lemma", "hex-conjecture", "girth5"}));
  chk->add_option("--max-hex", o.max_hex, "largest hexCycle(k) swept by hex-conjecture")->check(CLI::PositiveNumber);
  chk->add_option("--graphs", o.graphs, "grid documents for girth5 (\"planar\":false marks a non-planar input)");
  chk->add_option("--seed", o.random_seed, "sampling seed for girth5");
  chk->add_option("--jobs", o.jobs, "worker threads (default $L21_JOBS or 1)")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("paper-table", "Witness search for every cell of the summary table");
  table->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"json", "text"}));
  table->add_option("--jobs", o.jobs, "worker threads (default $L21_JOBS or 1)")->check(CLI::PositiveNumber);
  table->callback([&] {
    if (table->count("--format") == 0) o.format = "text";
  });

  auto* dot = app.add_subcommand("export-dot", "Write an oriented grid as a DOT digraph");
  dot->add_option("--input", o.input, "oriented grid document")->required();
  dot->add_option("--labels", o.labels, "labels CSV or inline colors");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::malformed_input);
  }

  try {
    if (*gen) return detail::cmd_gen(o, out);
    if (*solve) return detail::cmd_solve(o, out);
    if (*ver) return detail::cmd_verify(o, out);
    if (*met) return detail::cmd_metrics(o, out);
    if (*en) return detail::cmd_enumerate(o, out);
    if (*wit) return detail::cmd_witness(o, out, err);
    if (*chk) return detail::cmd_check(o, out);
    if (*table) return detail::cmd_summary_table(o, out);
    if (*dot) return detail::cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  }
  return static_cast<int>(ExitCode::malformed_input);
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace l21::cli
