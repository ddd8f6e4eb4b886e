#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "maxima/analytics.hpp"

using namespace maxima;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1, 1) == doctest::Approx(1.0));
  CHECK(double(harmonic(4, 1)) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  for (std::uint64_t n : {10ULL, 1000ULL, 100000ULL, 100001ULL, 3000000ULL}) {
    for (unsigned j : {1u, 2u, 3u, 7u}) {
      const long double direct = oracle::harmonic_direct(n, j);
      CHECK(double(std::fabs(harmonic(n, j) - direct) / direct) < 1e-14);
    }
  }
}

TEST_CASE("mu small cases") {
  CHECK(double(mu(1, 5)) == doctest::Approx(1.0));
  CHECK(double(mu(7, 1)) == doctest::Approx(1.0));
  for (std::uint64_t n : {1ULL, 5ULL, 100ULL, 12345ULL}) {
    CHECK(double(mu(n, 2)) == doctest::Approx(double(harmonic(n, 1))).epsilon(1e-14));
  }
  // n = 2, d = 2: the second point dominates or is dominated with prob 1/2.
  CHECK(double(mu(2, 2)) == doctest::Approx(1.5));
}

TEST_CASE("nu small cases") {
  CHECK(double(nu(1, 2)) == doctest::Approx(1.0));
  CHECK(double(nu(1, 6)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(double(nu(2, 2)) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(nu(10, 1), ContractViolation);
  CHECK_THROWS_AS(nu(2'000'000'000ULL, 3), NumericalRangeError);
  CHECK_THROWS_AS(nu(100, 13), NumericalRangeError);
}

TEST_CASE("growth is monotone and follows n^(1-1/d) for the simplex") {
  for (unsigned d = 2; d <= 6; ++d) {
    long double prev_mu = 0, prev_nu = 0;
    double prev_scaled = 0;
    for (std::uint64_t n = 10; n <= 10'000'000; n *= 10) {
      CHECK(mu(n, d) > prev_mu);
      CHECK(nu(n, d) > prev_nu);
      prev_mu = mu(n, d);
      prev_nu = nu(n, d);
      const double scaled = double(nu(n, d)) / std::pow(double(n), 1.0 - 1.0 / d);
      CHECK(scaled > 0.3);
      CHECK(scaled < 10.0);
      if (n >= 1'000'000) CHECK(scaled / prev_scaled < 1.2);
      prev_scaled = scaled;
    }
  }
}

TEST_CASE("records are maxima one dimension up") {
  for (unsigned d = 1; d <= 4; ++d) {
    for (std::uint64_t n : {1ULL, 2ULL, 17ULL, 200ULL}) {
      CHECK(double(expected_records(n, d)) == doctest::Approx(double(mu(n, d + 1))).epsilon(1e-12));
    }
  }
}

TEST_CASE("log gamma ratio") {
  CHECK(double(log_gamma_ratio(5.0L, 1.0L)) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
  CHECK(double(log_gamma_ratio(100.0L, 0.5L)) ==
        doctest::Approx(std::lgamma(100.5) - std::lgamma(100.0)).epsilon(1e-12));
}

TEST_CASE("model names") {
  for (auto m : {ExpectationModel::HypercubeMaxima, ExpectationModel::SimplexMaxima, ExpectationModel::HypercubeRecords}) {
    CHECK(parse_expectation_model(to_string(m)) == m);
  }
  CHECK(double(evaluate({ExpectationModel::HypercubeRecords, 10, 1})) == doctest::Approx(double(harmonic(10, 1))));
}
