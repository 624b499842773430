#include "corrpop/analytics.hpp"

namespace corrpop {

namespace {

BigRat rat_pow_inv(unsigned sigma, std::size_t e) {
  return BigRat(1, pow_int(sigma, e));
}

}  // namespace

BorderCountTable longest_border_counts(std::size_t n, unsigned sigma) {
  if (n == 0) throw std::invalid_argument("word length must be >= 1");
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  BorderCountTable table;
  table.n = n;
  table.sigma = sigma;
  table.counts.assign(n, BigInt(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (const Correlation& s : enumerate_gamma(j).members) {
      Correlation t(n, s.raw() << (n - j));
      table.counts[j] += pop_corr(t, sigma, PopMethod::rec1);
    }
  }
  for (const Correlation& s : enumerate_gamma(n).members)
    table.equal_pairs += pop_auto(s, n, sigma);
  return table;
}

BigInt longest_border_range(std::size_t n, unsigned sigma, std::size_t i,
                            std::size_t k) {
  if (i > k || k >= n) throw std::invalid_argument("range out of bounds");
  BorderCountTable table = longest_border_counts(n, sigma);
  BigInt total = 0;
  for (std::size_t j = i; j <= k; ++j) total += table.counts[j];
  return total;
}

ExpectationResult expected_longest_border(std::size_t n, unsigned sigma,
                                          unsigned threshold) {
  if (threshold < 2) throw std::invalid_argument("threshold J must be >= 2");
  ExpectationResult r;
  r.n = n;
  r.sigma = sigma;
  r.threshold = threshold;
  BorderCountTable table = longest_border_counts(n, sigma);
  BigRat norm = rat_pow_inv(sigma, 2 * n);
  for (std::size_t j = 1; j < n; ++j)
    r.value += BigRat(j) * BigRat(table.counts[j]) * norm;
  r.value_with_equal = r.value + BigRat(n) * BigRat(table.equal_pairs) * norm;
  for (std::size_t j = 1; j < std::min<std::size_t>(threshold, n); ++j)
    for (const Correlation& s : enumerate_gamma(j).members)
      r.lower_bound += BigRat(j) * BigRat(pop_auto(s, 2 * n, sigma)) * norm;
  r.upper_bound = BigRat(sigma) / BigRat((sigma - 1)) / BigRat((sigma - 1));
  return r;
}

AsymptoticEstimate asymptotic_constant(const Correlation& s, unsigned sigma,
                                       std::size_t precision_n) {
  std::size_t j = s.size();
  if (precision_n < 2 * j + 4)
    throw std::invalid_argument("precision budget too small");
  AsymptoticEstimate est;
  est.s = s;
  est.sigma = sigma;
  est.precision_n = precision_n;
  AutoPopulation a(s, sigma);
  BigRat p_s = a.at(j).convert_to<BigRat>();

  // h~(z) = sum_m p(s_m) z^-m / p(s), truncated at precision_n. The tail is
  // geometric via p(s_m) <= sigma^(m-j).
  auto h_series = [&](const BigRat& z_inv) -> BigRat {
    BigRat total = 0;
    BigRat z_pow = 1;
    for (std::size_t m = 0; m <= precision_n; ++m) {
      if (m >= j) total += BigRat(a.at(m)) * z_pow;
      z_pow *= z_inv;
    }
    return total / p_s;
  };
  auto tail = [&](std::size_t log_sigma_z) -> BigRat {
    // sum_{m > N} sigma^(m-j) z^-m with z = sigma^log_sigma_z:
    // sigma^(-j) * sum_{m>N} sigma^((1-log)z m) <= geometric sum.
    BigRat r = BigRat(1, pow_int(sigma, log_sigma_z - 1));
    BigRat first = rat_pow_inv(sigma, j) *
                   BigRat(1, pow_int(sigma, (log_sigma_z - 1) * (precision_n + 1)));
    return first / (1 - r) / p_s;
  };

  BigRat h2 = h_series(rat_pow_inv(sigma, 2));
  est.c_series = BigRat(2) * rat_pow_inv(sigma, 2 * j) - h2;
  est.tail_bound = tail(2);
  // The empirical ratio converges only like sigma^(-N/2) (the correction
  // term comes from h~(z^2)), so evaluate it far enough out that its error
  // is negligible against the series tail bound.
  std::size_t n_emp = 4 * precision_n;
  est.c_empirical =
      BigRat(a.at(n_emp)) / (p_s * BigRat(pow_int(sigma, n_emp)));
  est.limit_lower = est.c_series * p_s;
  est.limit_upper = est.limit_lower * BigRat(sigma) / BigRat(sigma - 1);

  // Two-level consistency check of the functional equation
  //   h~(z) + phi(z) h~(z^2) = 2 phi(z) z^-2j
  // with phi(z) = z/(z - sigma) + sum_{m=1}^{j} s[j-m] z^m (the Laurent
  // expansion of the psi sequence over all of Z), at z = sigma^2.
  BigRat z = BigInt(pow_int(sigma, 2)).convert_to<BigRat>();
  BigRat phi = z / (z - sigma);
  BigRat z_pow = 1;
  for (std::size_t m = 1; m <= j; ++m) {
    z_pow *= z;
    if (s.bit(j - m)) phi += z_pow;
  }
  BigRat h4 = h_series(rat_pow_inv(sigma, 4));
  est.feq_residual =
      h2 + phi * h4 - BigRat(2) * phi * rat_pow_inv(sigma, 4 * j);
  est.feq_tolerance = tail(2) + phi * tail(4);
  if (est.feq_residual < 0) est.feq_residual = -est.feq_residual;
  return est;
}

AsymptoticEstimate ratio_bounds(const Correlation& s, unsigned sigma,
                                std::size_t precision_n) {
  return asymptotic_constant(s, sigma, precision_n);
}

std::vector<RatioProbe> ratio_convergence_probe(const Correlation& s,
                                                unsigned sigma,
                                                std::size_t n_max,
                                                std::size_t precision_n) {
  std::size_t j = s.size();
  if (n_max <= j) throw std::invalid_argument("n_max must exceed |s|");
  AsymptoticEstimate est = asymptotic_constant(s, sigma, precision_n);
  std::vector<RatioProbe> probes;
  for (std::size_t n = j + 1; n <= n_max; ++n) {
    Correlation t(n, s.raw() << (n - j));
    RatioProbe probe;
    probe.n = n;
    probe.ratio = BigRat(pop_corr(t, sigma, PopMethod::rec1)) *
                  BigRat(1, pow_int(sigma, 2 * n));
    probe.within_bounds = probe.ratio >= est.limit_lower - est.tail_bound &&
                          probe.ratio < est.limit_upper + est.tail_bound;
    probes.push_back(probe);
  }
  return probes;
}

}  // namespace corrpop
