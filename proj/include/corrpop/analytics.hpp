#pragma once

#include <cstddef>
#include <vector>

#include "corrpop/population.hpp"

namespace corrpop {

/// L_j = number of pairs whose longest border has length exactly j, for
/// j in [0, n-1]; equal_pairs is the u = v mass (sum over Gamma_n = sigma^n).
struct BorderCountTable {
  std::size_t n = 0;
  unsigned sigma = 2;
  std::vector<BigInt> counts;  // counts[j] = L_j, j in [0, n-1]
  BigInt equal_pairs;          // diagnostic L_n
};

BorderCountTable longest_border_counts(std::size_t n, unsigned sigma);
BigInt longest_border_range(std::size_t n, unsigned sigma, std::size_t i,
                            std::size_t k);

struct ExpectationResult {
  std::size_t n = 0;
  unsigned sigma = 2;
  BigRat value;                // E(X) with the j = n mass excluded
  BigRat value_with_equal;     // alternative reading: adds n * sigma^-n
  unsigned threshold = 4;      // J
  BigRat lower_bound;          // sum_{j<J} sum_{s in Gamma_j} j p(s_2n)/sigma^2n
  BigRat upper_bound;          // sigma / (sigma-1)^2
};

ExpectationResult expected_longest_border(std::size_t n, unsigned sigma,
                                          unsigned threshold = 4);

/// Truncated-series and empirical estimates of the asymptotic constant
/// c = 2/sigma^(2j) - h~(sigma^2), with the limit interval for p(t)/sigma^2n.
struct AsymptoticEstimate {
  Correlation s;
  unsigned sigma = 2;
  std::size_t precision_n = 0;
  BigRat c_series;       // from the truncated series for h~(sigma^2)
  BigRat c_empirical;    // p(s_N) / (p(s) sigma^N)
  BigRat tail_bound;     // geometric bound on the series truncation error
  BigRat limit_lower;    // c * p(s)
  BigRat limit_upper;    // c * p(s) * sigma / (sigma - 1)
  BigRat feq_residual;   // functional-equation consistency residual
  BigRat feq_tolerance;  // combined truncation bound for the residual
};

AsymptoticEstimate asymptotic_constant(const Correlation& s, unsigned sigma,
                                       std::size_t precision_n);
AsymptoticEstimate ratio_bounds(const Correlation& s, unsigned sigma,
                                std::size_t precision_n = 64);

/// Exact population ratios p(0^(n-j) s)/sigma^2n for n = j+1 .. n_max.
struct RatioProbe {
  std::size_t n = 0;
  BigRat ratio;
  bool within_bounds = false;
};
std::vector<RatioProbe> ratio_convergence_probe(const Correlation& s,
                                                unsigned sigma,
                                                std::size_t n_max,
                                                std::size_t precision_n = 64);

}  // namespace corrpop
