#include "corrpop/population.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace corrpop {

namespace {

void check_auto_shape(const Correlation& s) {
  if (!s.empty() && !s.bit(0))
    throw std::invalid_argument("autocorrelation must have bit 0 set");
}

void check_gamma_member(const Correlation& s) {
  check_auto_shape(s);
  if (s.size() <= kDefaultEnumCap && !enumerate_gamma(s.size()).contains(s))
    throw std::invalid_argument("not a valid autocorrelation: " + s.str());
}

}  // namespace

BigInt psi(const Correlation& s, unsigned sigma, long long k) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  check_auto_shape(s);
  long long j = static_cast<long long>(s.size());
  if (k > j) return 0;
  if (k >= 1) return s.bit(static_cast<std::size_t>(j - k)) ? 1 : 0;
  return pow_int(sigma, static_cast<std::size_t>(-k));
}

AutoPopulation::AutoPopulation(Correlation s, unsigned sigma)
    : s_(std::move(s)), sigma_(sigma) {
  if (sigma_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
  check_auto_shape(s_);
  std::size_t j = s_.size();
  memo_.assign(j + 1, BigInt(0));
  if (j == 0) {
    memo_[0] = 1;  // p(epsilon) = 1
  } else {
    // p(s) by recursive decomposition: the suffix of s starting at its
    // basic period is itself an autocorrelation s', and s = s'_j.
    std::size_t p = j;
    for (std::size_t i = 1; i < j; ++i)
      if (s_.bit(i)) { p = i; break; }
    AutoPopulation tail(s_.suffix(j - p), sigma_);
    memo_[j] = tail.at(j);
  }
}

const BigInt& AutoPopulation::at(std::size_t m) {
  static const BigInt zero = 0;
  std::size_t j = s_.size();
  if (m < j) return zero;
  // Solved form of the recurrence, evaluated for increasing length:
  //   p(s_m) = 2 psi[2j-m] p(s) - sum_{k=j}^{floor((m+j)/2)} p(s_k) psi[2k-m]
  // (psi[2k-m] vanishes above the cap, p(s_k) vanishes below j).
  while (memo_.size() <= m) {
    std::size_t mm = memo_.size();
    long long m_ll = static_cast<long long>(mm);
    long long j_ll = static_cast<long long>(j);
    BigInt value = 2 * psi(s_, sigma_, 2 * j_ll - m_ll) * memo_[j];
    std::size_t k_max = (mm + j) / 2;
    for (std::size_t k = j; k <= k_max; ++k)
      value -= memo_[k] * psi(s_, sigma_, 2 * static_cast<long long>(k) - m_ll);
    memo_.push_back(std::move(value));
  }
  return memo_[m];
}

BigInt pop_auto(const Correlation& s, std::size_t m, unsigned sigma) {
  check_gamma_member(s);
  if (m < s.size())
    throw std::invalid_argument("extension length below the suffix length");
  static std::mutex mu;
  static std::map<std::pair<std::string, unsigned>, AutoPopulation> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(s.str(), sigma);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, AutoPopulation(s, sigma)).first;
  return it->second.at(m);
}

unsigned nfc(const Correlation& s) {
  check_auto_shape(s);
  if (s.empty()) throw std::invalid_argument("nfc of the empty correlation");
  std::size_t n = s.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  };
  for (std::size_t p = 1; p < n; ++p) {
    if (!s.bit(p)) continue;
    for (std::size_t i = 0; i + p < n; ++i) {
      std::size_t a = find(i), b = find(i + p);
      if (a != b) parent[b] = a;
    }
  }
  unsigned classes = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++classes;
  return classes;
}

std::vector<std::pair<Correlation, BigInt>> gamma_population_table(
    std::size_t n, unsigned sigma) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  const GammaSet& gamma = enumerate_gamma(n);
  std::size_t count = gamma.members.size();
  if (n == 0)
    return {{Correlation(), BigInt(1)}};
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  // Top-down: supersets first.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gamma.members[a].popcount() > gamma.members[b].popcount();
  });
  std::vector<BigInt> pop(count);
  for (std::size_t idx : order) {
    const Correlation& v = gamma.members[idx];
    BigInt value = pow_int(sigma, nfc(v));
    for (std::size_t other = 0; other < count; ++other) {
      const Correlation& w = gamma.members[other];
      if (other != idx && v.subset_of(w)) value -= pop[other];
    }
    pop[idx] = std::move(value);
  }
  std::vector<std::pair<Correlation, BigInt>> table;
  table.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    table.emplace_back(gamma.members[i], pop[i]);
  return table;
}

BigInt pop_auto_lattice(const Correlation& s, unsigned sigma) {
  if (!enumerate_gamma(s.size()).contains(s))
    throw std::invalid_argument("not a valid autocorrelation: " + s.str());
  for (const auto& [corr, value] : gamma_population_table(s.size(), sigma))
    if (corr == s) return value;
  throw std::logic_error("gamma table missing its own member");
}

PopMethod parse_pop_method(std::string_view name) {
  if (name == "rec1") return PopMethod::rec1;
  if (name == "rec2") return PopMethod::rec2;
  if (name == "nfc") return PopMethod::nfc;
  if (name == "brute") return PopMethod::brute;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

const char* pop_method_name(PopMethod m) {
  switch (m) {
    case PopMethod::rec1: return "rec1";
    case PopMethod::rec2: return "rec2";
    case PopMethod::nfc: return "nfc";
    case PopMethod::brute: return "brute";
  }
  return "?";
}

std::vector<CandidateForm> g_decomposition(const Correlation& t) {
  auto dec = decompose_correlation(t);
  if (!dec.valid)
    throw std::invalid_argument("not a valid correlation: " + t.str());
  std::size_t n = t.size(), j = dec.border_length;
  if (j >= n)
    throw std::invalid_argument("g decomposition applies to t outside Gamma_n");
  const GammaSet& gamma2n = enumerate_gamma(2 * n);
  std::vector<CandidateForm> forms;

  auto tail_bits = [&](std::size_t lambda) {
    // 1 at position lambda, s at positions 2n-j .. 2n-1.
    return (std::uint64_t{1} << lambda) | (dec.s.raw() << (2 * n - j));
  };

  CandidateForm plain;
  plain.lambda = 0;
  plain.blocks = 0;
  plain.form = Correlation(2 * n, tail_bits(0));
  plain.shift_valid = true;
  plain.in_gamma = gamma2n.contains(plain.form);
  forms.push_back(plain);

  for (std::size_t lambda = (2 * n - j + 1) / 2; lambda + 1 <= n && lambda >= 1;
       ++lambda) {
    bool shift_valid = dec.s.bit(j + 2 * lambda - 2 * n);
    for (std::size_t period = lambda; period >= 1; --period) {
      if (lambda % period != 0) continue;
      std::size_t blocks = lambda / period;
      std::uint64_t bits = tail_bits(lambda);
      for (std::size_t b = 0; b < blocks; ++b)
        bits |= std::uint64_t{1} << (b * period);
      CandidateForm f;
      f.lambda = lambda;
      f.blocks = blocks;
      f.form = Correlation(2 * n, bits);
      f.shift_valid = shift_valid;
      f.in_gamma = gamma2n.contains(f.form);
      forms.push_back(f);
    }
  }
  return forms;
}

BigInt pop_corr(const Correlation& t, unsigned sigma, PopMethod method,
                const BruteOptions& opts) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  auto dec = decompose_correlation(t);
  if (!dec.valid)
    throw std::invalid_argument("not a valid correlation: " + t.str());
  if (method == PopMethod::brute) return brute_population(t, sigma, opts);

  std::size_t n = t.size(), j = dec.border_length;
  if (j == n) {
    // t is an autocorrelation; compute it directly.
    return method == PopMethod::nfc ? pop_auto_lattice(t, sigma)
                                    : pop_auto(t, n, sigma);
  }
  const Correlation& s = dec.s;

  switch (method) {
    case PopMethod::rec1: {
      AutoPopulation a(s, sigma);
      BigInt total = a.at(2 * n);
      for (std::size_t lambda = 1; lambda <= j / 2; ++lambda)
        if (s.bit(j - 2 * lambda)) total += a.at(n + lambda);
      return total;
    }
    case PopMethod::rec2: {
      // Same sum as rec1 over the valid shifts, but each p(s_{2n-lambda})
      // is expanded one level through psi instead of read off directly.
      AutoPopulation a(s, sigma);
      BigInt total = a.at(2 * n);
      long long j_ll = static_cast<long long>(j);
      for (std::size_t lambda = (2 * n - j + 1) / 2;
           lambda + 1 <= n && lambda >= 1; ++lambda) {
        if (!s.bit(j + 2 * lambda - 2 * n)) continue;
        long long m = static_cast<long long>(2 * n - lambda);
        BigInt term = 2 * a.at(j) * psi(s, sigma, 2 * j_ll - m);
        std::size_t k_max = (static_cast<std::size_t>(m) + j) / 2;
        for (std::size_t k = j; k <= k_max; ++k)
          term -= a.at(k) * psi(s, sigma, 2 * static_cast<long long>(k) - m);
        total += term;
      }
      return total;
    }
    case PopMethod::nfc: {
      auto table = gamma_population_table(2 * n, sigma);
      std::map<Correlation, BigInt> by_corr(table.begin(), table.end());
      BigInt total = 0;
      for (const CandidateForm& f : g_decomposition(t))
        if (f.in_gamma) total += by_corr.at(f.form);
      return total;
    }
    case PopMethod::brute:
      break;
  }
  throw std::logic_error("unreachable");
}

BigInt pop_right(const Correlation& t, unsigned sigma) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  auto dec = decompose_correlation(t);
  if (!dec.valid)
    throw std::invalid_argument("not a valid correlation: " + t.str());
  if (dec.border_length == 0)
    throw std::invalid_argument("right population undefined for 0^n");
  return pop_auto(dec.s, dec.s.size(), sigma) *
         pow_int(sigma, t.size() - dec.border_length);
}

}  // namespace corrpop
