#pragma once

// Random sample generation and instrumented, trial-averaged algorithm runs.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

/// Bad command-line or experiment parameters (exit status 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DistributionKind { Hypercube, SimplexSolid, SimplexSurface };

struct Distribution {
  DistributionKind kind = DistributionKind::Hypercube;
  std::size_t d = 2;
};

std::string to_string(DistributionKind kind);
/// "hypercube", "simplex-solid", "simplex-surface".
DistributionKind parse_distribution(const std::string& name);

/// The trial PRNG is std::mt19937_64; each trial gets its own stream seeded
/// with splitmix64(seed, trial) so trials can run in any order.
using Rng = std::mt19937_64;
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// Uniform double in [0,1) from the top 53 bits of one draw.
double uniform01(Rng& rng) noexcept;

/// Hypercube: d independent uniforms. SimplexSolid: the first d of d+1
/// normalized exponentials. SimplexSurface: d normalized exponentials.
std::vector<Point> generate(const Distribution& dist, std::size_t n, Rng& rng);
std::vector<Point> generate(const Distribution& dist, std::size_t n, std::uint64_t seed);

enum class AlgorithmId { Naive, List, ListMtf, TwoPhase, TwoPhasePrune, TwoPhaseSieve, TwoPhasePruneSieve, Online };

std::string to_string(AlgorithmId id);
/// Throws UsageError for unknown ids.
AlgorithmId parse_algorithm(const std::string& name);
std::vector<AlgorithmId> all_algorithms();

struct RunOutcome {
  std::vector<Point> maxima;  // discovery order
  CostCounter counter;
  std::size_t records = 0;  // points accepted by the sequential scan; 0 for naive
};

/// Runs one algorithm on one sample with a fresh counter. The two-phase
/// prune variants prune at n/10.
RunOutcome run_algorithm(AlgorithmId id, std::span<const Point> points);

struct ExperimentSpec {
  Distribution distribution;
  std::size_t n = 100;
  std::size_t trials = 1;
  std::vector<AlgorithmId> algorithms;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// One CSV row.
struct BenchRecord {
  std::string algorithm;
  std::string distribution;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  double avg_scalar_comparisons_per_point = 0.0;
  double avg_dominated_calls = 0.0;  // per trial
  double avg_maxima = 0.0;
  double avg_records = 0.0;
  std::uint64_t seed = 0;
};

struct ExperimentReport {
  std::vector<BenchRecord> records;      // one per algorithm, spec order
  std::vector<double> maxima_std_error;  // sample sd of maxima count / sqrt(trials)
  bool paired_agreement = true;          // all algorithms agreed on every trial
};

/// Each trial draws one sample and feeds it to every algorithm. Per-trial
/// results are reduced in trial order, so thread count never changes output.
ExperimentReport run_experiment(const ExperimentSpec& spec);

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace maxima
