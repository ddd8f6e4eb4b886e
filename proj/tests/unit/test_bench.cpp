#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "maxima/bench.hpp"

using namespace maxima;

TEST_CASE("generators respect their supports") {
  Rng rng(1);
  for (std::size_t d : {2u, 3u, 5u}) {
    for (const Point& p : generate({DistributionKind::Hypercube, d}, 500, rng)) {
      for (double x : p.coords) CHECK((x >= 0.0 && x < 1.0));
    }
    for (const Point& p : generate({DistributionKind::SimplexSolid, d}, 500, rng)) {
      const double s = std::accumulate(p.coords.begin(), p.coords.end(), 0.0);
      CHECK(s <= 1.0 + 1e-12);
      for (double x : p.coords) CHECK(x >= 0.0);
    }
    for (const Point& p : generate({DistributionKind::SimplexSurface, d}, 500, rng)) {
      CHECK(std::accumulate(p.coords.begin(), p.coords.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("generator moments") {
  Rng rng(2);
  const std::size_t n = 200000;
  double sum = 0;
  for (const Point& p : generate({DistributionKind::Hypercube, 1}, n, rng)) sum += p[0];
  CHECK(std::fabs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
  // Solid triangle: P(x1 + x2 <= 1/2) = 1/4.
  std::size_t hits = 0;
  for (const Point& p : generate({DistributionKind::SimplexSolid, 2}, n, rng)) hits += p[0] + p[1] <= 0.5;
  CHECK(std::fabs(double(hits) / n - 0.25) < 4 * std::sqrt(0.25 * 0.75 / n));
  // Surface segment in d = 2: x1 is uniform on [0,1].
  hits = 0;
  for (const Point& p : generate({DistributionKind::SimplexSurface, 2}, n, rng)) hits += p[0] <= 0.3;
  CHECK(std::fabs(double(hits) / n - 0.3) < 4 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("seeded generation is reproducible") {
  const Distribution dist{DistributionKind::SimplexSolid, 4};
  CHECK(generate(dist, 50, 42) == generate(dist, 50, 42));
  CHECK_FALSE(generate(dist, 50, 42) == generate(dist, 50, 43));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
}

TEST_CASE("algorithm names round trip") {
  for (AlgorithmId id : all_algorithms()) CHECK(parse_algorithm(to_string(id)) == id);
  CHECK(all_algorithms().size() == 8);
  CHECK_THROWS_AS(parse_algorithm("bogus"), UsageError);
  CHECK_THROWS_AS(parse_distribution("sphere"), UsageError);
}

TEST_CASE("experiment output is deterministic across thread counts") {
  ExperimentSpec spec;
  spec.distribution = {DistributionKind::Hypercube, 3};
  spec.n = 300;
  spec.trials = 12;
  spec.algorithms = all_algorithms();
  spec.seed = 77;
  std::ostringstream a, b, c;
  const auto r1 = run_experiment(spec);
  write_csv(a, r1.records);
  write_csv(b, run_experiment(spec).records);
  spec.threads = 2;
  write_csv(c, run_experiment(spec).records);
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  CHECK(r1.paired_agreement);
  for (const BenchRecord& rec : r1.records) CHECK(rec.avg_maxima == r1.records[0].avg_maxima);
  CHECK(a.str().rfind("algorithm,distribution,d,n,trials,avg_scalar_comparisons_per_point,", 0) == 0);
}

TEST_CASE("surface samples are all maxima") {
  ExperimentSpec spec;
  spec.distribution = {DistributionKind::SimplexSurface, 3};
  spec.n = 200;
  spec.trials = 3;
  spec.algorithms = {AlgorithmId::TwoPhase, AlgorithmId::Online};
  const auto r = run_experiment(spec);
  for (const BenchRecord& rec : r.records) CHECK(rec.avg_maxima == 200.0);
}

TEST_CASE("empty algorithm list is a usage error") {
  ExperimentSpec spec;
  CHECK_THROWS_AS(run_experiment(spec), UsageError);
}
