#include "maxima/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "maxima/algorithms.hpp"
#include "maxima/analytics.hpp"
#include "maxima/bench.hpp"
#include "maxima/io.hpp"
#include "maxima/layers.hpp"
#include "maxima/mlcs.hpp"

namespace maxima {

namespace {

void print_counter(std::ostream& err, const CostCounter& c) {
  err << " scalar_comparisons=" << c.scalar_comparisons << " dominated_calls=" << c.dominated_calls << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int run_maxima(const std::string& input, const std::string& algo, std::ostream& out, std::ostream& err) {
  const AlgorithmId id = parse_algorithm(algo);
  const std::vector<Point> points = read_points_file(input);
  const RunOutcome run = run_algorithm(id, points);
  write_points(out, run.maxima);
  err << "algorithm=" << to_string(id) << " points=" << points.size() << " maxima=" << run.maxima.size()
      << " records=" << run.records;
  print_counter(err, run.counter);
  return kExitOk;
}

int run_layers(const std::string& input, const std::string& method, std::ostream& out, std::ostream& err) {
  if (method != "peel-maxima" && method != "peel-naive" && method != "deb") {
    throw UsageError("unknown layer method '" + method + "'");
  }
  const std::vector<Point> points = read_points_file(input);
  CostCounter counter;
  const LayerPartition partition = method == "deb" ? deb_layers(points, counter)
                                                   : peel_layers(points,
                                                                 method == "peel-maxima" ? PeelEngine::Maxima
                                                                                         : PeelEngine::Naive,
                                                                 counter);
  for (std::size_t k = 0; k < partition.count(); ++k) {
    for (std::size_t idx : partition.layers[k]) out << (k + 1) << '\t' << format_point(points[idx]) << '\n';
  }
  err << "method=" << method << " points=" << points.size() << " layers=" << partition.count();
  print_counter(err, counter);
  return kExitOk;
}

int run_mlcs(const std::string& input, const std::string& engine_name, std::ostream& out, std::ostream& err) {
  LcsEngine engine;
  if (engine_name == "hakata-imai") {
    engine = LcsEngine::HakataImai;
  } else if (engine_name == "maxima") {
    engine = LcsEngine::Maxima;
  } else {
    throw UsageError("unknown mlcs engine '" + engine_name + "'");
  }
  const std::vector<std::string> seqs = read_sequences_file(input);
  if (seqs.size() < 2) throw InputError("need at least two sequences, found " + std::to_string(seqs.size()));
  CostCounter counter;
  const LcsResult result = mlcs(seqs, engine, counter);
  out << result.length << '\t' << result.witness << '\n';
  out << "layers";
  for (std::size_t s : result.layer_sizes) out << '\t' << s;
  out << '\n';
  err << "engine=" << engine_name << " strings=" << seqs.size();
  print_counter(err, counter);
  return kExitOk;
}

int run_bench(ExperimentSpec spec, const std::string& dist, const std::string& algos, const std::string& output,
              std::ostream& out) {
  spec.distribution.kind = parse_distribution(dist);
  for (const std::string& a : split_list(algos)) spec.algorithms.push_back(parse_algorithm(a));
  const ExperimentReport report = run_experiment(spec);
  if (output.empty()) {
    write_csv(out, report.records);
  } else {
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write '" + output + "'");
    write_csv(file, report.records);
  }
  return kExitOk;
}

int run_expect(const std::string& model_name, unsigned d, std::uint64_t n, std::ostream& out) {
  ExpectationQuery query;
  query.model = parse_expectation_model(model_name);
  query.d = d;
  query.n = n;
  const long double value = evaluate(query);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", value);
  out << to_string(query.model) << '\t' << d << '\t' << n << '\t' << buf << '\n';
  return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maxima finding, maximal layers and MLCS with comparison accounting", "maxima"};
  app.require_subcommand(1);

  std::string input;
  std::string algo = "2phase";
  auto* maxima_cmd = app.add_subcommand("maxima", "Print the maxima of a TSV point file");
  maxima_cmd->add_option("--input", input, "TSV point file")->required();
  maxima_cmd->add_option("--algo", algo, "naive|list|list-mtf|2phase|2phase-prune|2phase-sieve|2phase-prune-sieve|online");

  std::string method = "peel-maxima";
  auto* layers_cmd = app.add_subcommand("layers", "Print maximal layers of a TSV point file");
  layers_cmd->add_option("--input", input, "TSV point file")->required();
  layers_cmd->add_option("--method", method, "peel-maxima|peel-naive|deb");

  std::string engine = "maxima";
  auto* mlcs_cmd = app.add_subcommand("mlcs", "Longest common subsequence of the sequences in a file");
  mlcs_cmd->add_option("--input", input, "one sequence per line")->required();
  mlcs_cmd->add_option("--engine", engine, "hakata-imai|maxima");

  ExperimentSpec spec;
  std::string dist = "hypercube";
  std::string algos = "2phase";
  std::string output;
  auto* bench_cmd = app.add_subcommand("bench", "Trial-averaged comparison counts as CSV");
  bench_cmd->add_option("--dist", dist, "hypercube|simplex-solid|simplex-surface");
  bench_cmd->add_option("--dim", spec.distribution.d, "dimension")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--n", spec.n, "sample size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--trials", spec.trials, "number of trials")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--algos", algos, "comma-separated algorithm ids");
  bench_cmd->add_option("--seed", spec.seed, "base seed");
  bench_cmd->add_option("--threads", spec.threads, "worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", output, "CSV path (default stdout)");

  std::string model = "hypercube-maxima";
  unsigned dim = 2;
  std::uint64_t n = 100;
  auto* expect_cmd = app.add_subcommand("expect", "Exact expected maxima/record counts");
  expect_cmd->add_option("--model", model, "hypercube-maxima|simplex-maxima|hypercube-records");
  expect_cmd->add_option("--dim", dim, "dimension")->required();
  expect_cmd->add_option("--n", n, "sample size")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*maxima_cmd) return run_maxima(input, algo, out, err);
    if (*layers_cmd) return run_layers(input, method, out, err);
    if (*mlcs_cmd) return run_mlcs(input, engine, out, err);
    if (*bench_cmd) return run_bench(spec, dist, algos, output, out);
    if (*expect_cmd) return run_expect(model, dim, n, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Contract and range violations reachable from the command line are
    // parameter problems.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxima
