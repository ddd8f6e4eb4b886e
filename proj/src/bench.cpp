#include "maxima/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "maxima/algorithms.hpp"

namespace maxima {

std::string to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Hypercube: return "hypercube";
    case DistributionKind::SimplexSolid: return "simplex-solid";
    case DistributionKind::SimplexSurface: return "simplex-surface";
  }
  return "?";
}

DistributionKind parse_distribution(const std::string& name) {
  if (name == "hypercube") return DistributionKind::Hypercube;
  if (name == "simplex-solid") return DistributionKind::SimplexSolid;
  if (name == "simplex-surface") return DistributionKind::SimplexSurface;
  throw UsageError("unknown distribution '" + name + "'");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double exponential(Rng& rng) {
  // 1 - u lies in (0, 1]
  return -std::log(1.0 - uniform01(rng));
}

}  // namespace

std::vector<Point> generate(const Distribution& dist, std::size_t n, Rng& rng) {
  if (dist.d == 0) throw UsageError("dimension must be at least 1");
  std::vector<Point> points;
  points.reserve(n);
  const std::size_t d = dist.d;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(d);
    switch (dist.kind) {
      case DistributionKind::Hypercube:
        for (double& x : c) x = uniform01(rng);
        break;
      case DistributionKind::SimplexSolid: {
        double total = 0.0;
        for (double& x : c) total += (x = exponential(rng));
        total += exponential(rng);
        for (double& x : c) x /= total;
        break;
      }
      case DistributionKind::SimplexSurface: {
        double total = 0.0;
        for (double& x : c) total += (x = exponential(rng));
        for (double& x : c) x /= total;
        break;
      }
    }
    points.emplace_back(std::move(c), i);
  }
  return points;
}

std::vector<Point> generate(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return generate(dist, n, rng);
}

std::string to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Naive: return "naive";
    case AlgorithmId::List: return "list";
    case AlgorithmId::ListMtf: return "list-mtf";
    case AlgorithmId::TwoPhase: return "2phase";
    case AlgorithmId::TwoPhasePrune: return "2phase-prune";
    case AlgorithmId::TwoPhaseSieve: return "2phase-sieve";
    case AlgorithmId::TwoPhasePruneSieve: return "2phase-prune-sieve";
    case AlgorithmId::Online: return "online";
  }
  return "?";
}

std::vector<AlgorithmId> all_algorithms() {
  return {AlgorithmId::Naive,         AlgorithmId::List,          AlgorithmId::ListMtf,
          AlgorithmId::TwoPhase,      AlgorithmId::TwoPhasePrune, AlgorithmId::TwoPhaseSieve,
          AlgorithmId::TwoPhasePruneSieve, AlgorithmId::Online};
}

AlgorithmId parse_algorithm(const std::string& name) {
  for (AlgorithmId id : all_algorithms()) {
    if (to_string(id) == name) return id;
  }
  throw UsageError("unknown algorithm '" + name + "'");
}

RunOutcome run_algorithm(AlgorithmId id, std::span<const Point> points) {
  RunOutcome out;
  auto two_phase = [&](bool sieve, bool prune_early) {
    MaximaConfig config;
    config.use_sieve = sieve;
    if (prune_early) config.prune = PruneAtFraction{10};
    PhaseOneStats stats;
    out.maxima = two_phase_maxima(points, config, out.counter, &stats);
    out.records = stats.records_inserted;
  };
  switch (id) {
    case AlgorithmId::Naive: out.maxima = naive_maxima(points, out.counter); break;
    case AlgorithmId::List: out.maxima = list_maxima(points, false, out.counter, &out.records); break;
    case AlgorithmId::ListMtf: out.maxima = list_maxima(points, true, out.counter, &out.records); break;
    case AlgorithmId::TwoPhase: two_phase(false, false); break;
    case AlgorithmId::TwoPhasePrune: two_phase(false, true); break;
    case AlgorithmId::TwoPhaseSieve: two_phase(true, false); break;
    case AlgorithmId::TwoPhasePruneSieve: two_phase(true, true); break;
    case AlgorithmId::Online: out.maxima = online_maxima(points, out.counter, {}, &out.records); break;
  }
  return out;
}

namespace {

struct TrialResult {
  std::uint64_t comparisons = 0;
  std::uint64_t dominated_calls = 0;
  std::size_t maxima = 0;
  std::size_t records = 0;
};

std::vector<TrialResult> run_trial(const ExperimentSpec& spec, std::size_t trial) {
  Rng rng(trial_seed(spec.seed, trial));
  const std::vector<Point> sample = generate(spec.distribution, spec.n, rng);
  std::vector<TrialResult> results;
  results.reserve(spec.algorithms.size());
  for (AlgorithmId id : spec.algorithms) {
    const RunOutcome run = run_algorithm(id, sample);
    results.push_back({run.counter.scalar_comparisons, run.counter.dominated_calls, run.maxima.size(), run.records});
  }
  return results;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.n == 0) throw UsageError("n must be at least 1");
  if (spec.trials == 0) throw UsageError("trials must be at least 1");
  if (spec.algorithms.empty()) throw UsageError("no algorithms selected");

  std::vector<std::vector<TrialResult>> per_trial(spec.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < spec.trials; ++t) per_trial[t] = run_trial(spec, t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < spec.trials; t += workers) per_trial[t] = run_trial(spec, t);
      });
    }
  }

  ExperimentReport report;
  const double trials = static_cast<double>(spec.trials);
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    double comparisons = 0.0, calls = 0.0, maxima = 0.0, maxima_sq = 0.0, records = 0.0;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const TrialResult& r = per_trial[t][a];
      comparisons += static_cast<double>(r.comparisons);
      calls += static_cast<double>(r.dominated_calls);
      maxima += static_cast<double>(r.maxima);
      maxima_sq += static_cast<double>(r.maxima) * static_cast<double>(r.maxima);
      records += static_cast<double>(r.records);
      if (r.maxima != per_trial[t][0].maxima) report.paired_agreement = false;
    }
    BenchRecord rec;
    rec.algorithm = to_string(spec.algorithms[a]);
    rec.distribution = to_string(spec.distribution.kind);
    rec.d = spec.distribution.d;
    rec.n = spec.n;
    rec.trials = spec.trials;
    rec.avg_scalar_comparisons_per_point = comparisons / (static_cast<double>(spec.n) * trials);
    rec.avg_dominated_calls = calls / trials;
    rec.avg_maxima = maxima / trials;
    rec.avg_records = records / trials;
    rec.seed = spec.seed;
    report.records.push_back(rec);

    double variance = 0.0;
    if (spec.trials > 1) {
      variance = (maxima_sq - maxima * maxima / trials) / (trials - 1.0);
      if (variance < 0.0) variance = 0.0;
    }
    report.maxima_std_error.push_back(std::sqrt(variance / trials));
  }
  return report;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "algorithm,distribution,d,n,trials,avg_scalar_comparisons_per_point,avg_dominated_calls,avg_maxima,"
         "avg_records,seed\n";
  char buf[256];
  for (const BenchRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.2f,%.2f,%.4f,%.4f,", r.d, r.n, r.trials,
                  r.avg_scalar_comparisons_per_point, r.avg_dominated_calls, r.avg_maxima, r.avg_records);
    out << r.algorithm << ',' << r.distribution << ',' << buf << r.seed << '\n';
  }
}

}  // namespace maxima
