#pragma once

// Exact expected counts for uniform random samples.
//
//   mu(n,d)  expected maxima of n points in [0,1]^d
//   nu(n,d)  expected maxima of n points in the solid simplex {x >= 0, sum x <= 1}
//   expected_records(n,d)  expected non-dominated records in [0,1]^d

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxima {

/// Raised when an evaluation would leave the range where its result is
/// numerically trustworthy.
class NumericalRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generalized harmonic number H_n^(j) = sum_{i<=n} i^-j. Direct compensated
/// summation up to 10^5 terms, Euler-Maclaurin tail beyond that.
long double harmonic(std::uint64_t n, unsigned j);

/// mu(n,1) = 1, mu(n,d) = 1/(d-1) * sum_{1<=j<d} H_n^(d-j) mu(n,j).
long double mu(std::uint64_t n, unsigned d);

/// nu(n,d) = n sum_{0<=j<d} C(d-1,j) (-1)^j Gamma(n) Gamma((j+1)/d) / Gamma(n+(j+1)/d).
/// Defined for d >= 2; throws NumericalRangeError outside n <= 1e9, d <= 12.
long double nu(std::uint64_t n, unsigned d);

/// sum_{i<=n} mu(i,d)/i, evaluated term by term (O(n d^2)).
long double expected_records(std::uint64_t n, unsigned d);

/// ln Gamma(x + a) - ln Gamma(x) for x >= 1, a in (0, 1].
long double log_gamma_ratio(long double x, long double a);

enum class ExpectationModel { HypercubeMaxima, SimplexMaxima, HypercubeRecords };

struct ExpectationQuery {
  ExpectationModel model = ExpectationModel::HypercubeMaxima;
  std::uint64_t n = 1;
  unsigned d = 1;
};

long double evaluate(const ExpectationQuery& query);

std::string to_string(ExpectationModel model);
/// Accepts "hypercube-maxima", "simplex-maxima", "hypercube-records".
ExpectationModel parse_expectation_model(const std::string& name);

}  // namespace maxima
