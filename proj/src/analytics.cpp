#include "maxima/analytics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

namespace {

constexpr std::uint64_t kDirectLimit = 100'000;
constexpr std::uint64_t kTailStart = 1000;

long double inverse_power(long double x, unsigned j) {
  const long double inv = 1.0L / x;
  long double r = inv;
  for (unsigned k = 1; k < j; ++k) r *= inv;
  return r;
}

// Kahan summation of i^-j for i = hi down to lo.
long double direct_sum(std::uint64_t lo, std::uint64_t hi, unsigned j) {
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (std::uint64_t i = hi; i >= lo; --i) {
    const long double term = inverse_power(static_cast<long double>(i), j);
    const long double y = term - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (i == lo) break;
  }
  return sum;
}

// sum_{i=m+1}^{n} i^-j by Euler-Maclaurin with five Bernoulli corrections.
long double tail_sum(std::uint64_t m, std::uint64_t n, unsigned j) {
  const long double a = static_cast<long double>(m);
  const long double b = static_cast<long double>(n);
  const long double jj = static_cast<long double>(j);
  long double integral = j == 1 ? std::log(b / a) : (std::pow(a, 1.0L - jj) - std::pow(b, 1.0L - jj)) / (jj - 1.0L);
  long double sum = integral + (std::pow(b, -jj) - std::pow(a, -jj)) / 2.0L;
  // B_{2k}/(2k)!
  static constexpr std::array<long double, 5> coeff = {
      1.0L / 12.0L, -1.0L / 720.0L, 1.0L / 30240.0L, -1.0L / 1209600.0L, 1.0L / 47900160.0L};
  long double rising = jj;  // (j)_1
  for (std::size_t k = 1; k <= coeff.size(); ++k) {
    const long double r = static_cast<long double>(2 * k - 1);
    // f^(r)(x) = -(j)_r x^(-j-r) for odd r
    const long double fb = -rising * std::pow(b, -jj - r);
    const long double fa = -rising * std::pow(a, -jj - r);
    sum += coeff[k - 1] * (fb - fa);
    rising *= (jj + r) * (jj + r + 1.0L);
  }
  return sum;
}

long double binomial(unsigned n, unsigned k) {
  long double r = 1.0L;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

std::vector<long double> mu_table(std::span<const long double> h, unsigned d) {
  // h[j] = H_n^(j) for j = 1..d-1
  std::vector<long double> m(d + 1, 0.0L);
  m[1] = 1.0L;
  for (unsigned k = 2; k <= d; ++k) {
    long double s = 0.0L;
    for (unsigned j = 1; j < k; ++j) s += h[k - j] * m[j];
    m[k] = s / static_cast<long double>(k - 1);
  }
  return m;
}

}  // namespace

long double harmonic(std::uint64_t n, unsigned j) {
  if (n < 1 || j < 1) throw ContractViolation("harmonic(n, j) needs n >= 1 and j >= 1");
  if (n <= kDirectLimit) return direct_sum(1, n, j);
  return direct_sum(1, kTailStart, j) + tail_sum(kTailStart, n, j);
}

long double mu(std::uint64_t n, unsigned d) {
  if (n < 1 || d < 1) throw ContractViolation("mu(n, d) needs n >= 1 and d >= 1");
  std::vector<long double> h(d, 0.0L);
  for (unsigned j = 1; j < d; ++j) h[j] = harmonic(n, j);
  return mu_table(h, d)[d];
}

long double log_gamma_ratio(long double x, long double a) {
  if (x < 16.0L) return std::lgamma(x + a) - std::lgamma(x);
  // Difference of two Stirling series, arranged to avoid subtracting the
  // large (x - 1/2) ln x terms.
  long double r = (x - 0.5L) * std::log1p(a / x) + a * std::log(x + a) - a;
  static constexpr std::array<long double, 4> coeff = {1.0L / 12.0L, -1.0L / 360.0L, 1.0L / 1260.0L,
                                                       -1.0L / 1680.0L};
  for (std::size_t k = 1; k <= coeff.size(); ++k) {
    const long double p = static_cast<long double>(2 * k - 1);
    r += coeff[k - 1] * (std::pow(x + a, -p) - std::pow(x, -p));
  }
  return r;
}

long double nu(std::uint64_t n, unsigned d) {
  if (n < 1 || d < 2) throw ContractViolation("nu(n, d) needs n >= 1 and d >= 2");
  if (n > 1'000'000'000ULL || d > 12) {
    throw NumericalRangeError("nu(n, d) is only evaluated for n <= 1e9 and d <= 12");
  }
  const long double x = static_cast<long double>(n);
  long double sum = 0.0L;
  long double magnitude = 0.0L;
  for (unsigned j = 0; j < d; ++j) {
    const long double a = static_cast<long double>(j + 1) / static_cast<long double>(d);
    const long double term = binomial(d - 1, j) * std::exp(std::lgamma(a) - log_gamma_ratio(x, a));
    sum += (j % 2 == 0) ? term : -term;
    magnitude += term;
  }
  const long double rel_error = magnitude * std::numeric_limits<long double>::epsilon() * 64.0L / std::fabs(sum);
  if (!(rel_error < 1e-9L)) {
    throw NumericalRangeError("nu(n, d): alternating sum lost too many digits");
  }
  return x * sum;
}

long double expected_records(std::uint64_t n, unsigned d) {
  if (n < 1 || d < 1) throw ContractViolation("expected_records(n, d) needs n >= 1 and d >= 1");
  std::vector<long double> h(d, 0.0L);
  long double total = 0.0L;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const long double x = static_cast<long double>(i);
    for (unsigned j = 1; j < d; ++j) h[j] += inverse_power(x, j);
    total += mu_table(h, d)[d] / x;
  }
  return total;
}

long double evaluate(const ExpectationQuery& query) {
  switch (query.model) {
    case ExpectationModel::HypercubeMaxima: return mu(query.n, query.d);
    case ExpectationModel::SimplexMaxima: return nu(query.n, query.d);
    case ExpectationModel::HypercubeRecords: return expected_records(query.n, query.d);
  }
  throw ContractViolation("unknown expectation model");
}

std::string to_string(ExpectationModel model) {
  switch (model) {
    case ExpectationModel::HypercubeMaxima: return "hypercube-maxima";
    case ExpectationModel::SimplexMaxima: return "simplex-maxima";
    case ExpectationModel::HypercubeRecords: return "hypercube-records";
  }
  return "?";
}

ExpectationModel parse_expectation_model(const std::string& name) {
  if (name == "hypercube-maxima") return ExpectationModel::HypercubeMaxima;
  if (name == "simplex-maxima") return ExpectationModel::SimplexMaxima;
  if (name == "hypercube-records") return ExpectationModel::HypercubeRecords;
  throw ContractViolation("unknown model '" + name + "'");
}

}  // namespace maxima
