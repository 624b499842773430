#include "corrpop/sets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace corrpop {

bool GammaSet::contains(const Correlation& s) const {
  return s.size() == n &&
         std::binary_search(members.begin(), members.end(), s);
}

bool DeltaSet::contains(const Correlation& t) const {
  return t.size() == n &&
         std::binary_search(members.begin(), members.end(), t);
}

namespace {

// Autocorrelation of a binary word held as a bitmask (letter i at bit i).
std::uint64_t binary_autocorr(std::uint64_t w, std::size_t n) {
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < n; ++p) {
    std::uint64_t mask = (std::uint64_t{1} << (n - p)) - 1;
    if (((w >> p) & mask) == (w & mask)) bits |= std::uint64_t{1} << p;
  }
  return bits;
}

GammaSet build_gamma(std::size_t n) {
  GammaSet g;
  g.n = n;
  if (n == 0) {
    g.members.push_back(Correlation());  // Gamma_0 = { epsilon }
    return g;
  }
  std::set<std::uint64_t> seen;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
    seen.insert(binary_autocorr(w, n));
  for (std::uint64_t bits : seen) g.members.emplace_back(n, bits);
  std::sort(g.members.begin(), g.members.end());
  return g;
}

}  // namespace

const GammaSet& enumerate_gamma(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw std::invalid_argument("gamma enumeration cap exceeded (n = " +
                                std::to_string(n) + ")");
  static std::mutex mu;
  static std::map<std::size_t, GammaSet> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gamma(n)).first;
  return it->second;
}

DeltaSet enumerate_delta(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw std::invalid_argument("delta enumeration cap exceeded (n = " +
                                std::to_string(n) + ")");
  DeltaSet d;
  d.n = n;
  for (std::size_t j = 0; j <= n; ++j) {
    for (const Correlation& s : enumerate_gamma(j, cap).members) {
      // 0^(n-j) prefix: shift the suffix bits up.
      d.members.emplace_back(n, s.raw() << (n - j));
    }
  }
  std::sort(d.members.begin(), d.members.end());
  return d;
}

GammaSet enumerate_gamma_sigma(std::size_t n, unsigned sigma,
                               const BruteOptions& opts) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  BigInt total = pow_int(sigma, n);
  if (total > opts.budget) throw BudgetExceeded("gamma enumeration budget");
  GammaSet g;
  g.n = n;
  if (n == 0) {
    g.members.push_back(Correlation());
    return g;
  }
  std::set<Correlation> seen;
  std::uint64_t count = total.convert_to<std::uint64_t>();
  std::vector<std::uint8_t> w(n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) { w[i] = static_cast<std::uint8_t>(c % sigma); c /= sigma; }
    seen.insert(autocorrelation(Word(w, sigma)));
  }
  g.members.assign(seen.begin(), seen.end());
  return g;
}

CorrelationDecomposition decompose_correlation(const Correlation& t) {
  if (t.empty()) throw std::invalid_argument("decomposition of empty correlation");
  CorrelationDecomposition d;
  std::size_t zeros = t.leading_zeros();
  d.border_length = t.size() - zeros;
  d.s = t.suffix(d.border_length);
  d.valid = enumerate_gamma(d.border_length).contains(d.s) ||
            (d.border_length == 0 && d.s.empty());
  return d;
}

std::vector<CardinalityRow> cardinalities(std::size_t n_max, std::size_t cap) {
  std::vector<CardinalityRow> rows;
  std::uint64_t delta = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    CardinalityRow row;
    row.n = n;
    row.kappa = enumerate_gamma(n, cap).members.size();
    delta += row.kappa;  // delta_n = sum of kappa_j, j <= n
    row.delta = delta;
    if (n >= 2) {
      double ln_n = std::log(static_cast<double>(n));
      row.normalized_kappa = std::log(static_cast<double>(row.kappa)) / (ln_n * ln_n);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace corrpop
