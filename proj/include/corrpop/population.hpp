#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "corrpop/sets.hpp"
#include "corrpop/words.hpp"

namespace corrpop {

// psi sequence attached to a fixed suffix autocorrelation s in Gamma_j:
//   0 for k > j, s[j-k] for 1 <= k <= j, sigma^(-k) for k < 1.
// Always an exact integer.
BigInt psi(const Correlation& s, unsigned sigma, long long k);

/// Evaluates p(s_m) for the extension family s_m = 1 0^(m-j-1) s of a fixed
/// suffix s in Gamma_j, by solving the Guibas-Odlyzko recurrence for
/// increasing m. Non-realizable extensions come out as 0.
class AutoPopulation {
 public:
  AutoPopulation(Correlation s, unsigned sigma);

  const Correlation& base() const { return s_; }
  unsigned sigma() const { return sigma_; }
  // p(s_m); m == |s| gives p(s) itself, m < |s| gives 0.
  const BigInt& at(std::size_t m);

 private:
  Correlation s_;
  unsigned sigma_;
  std::vector<BigInt> memo_;  // memo_[m] = p(s_m)
};

// p(s_m); memoized process-wide per (s, sigma).
BigInt pop_auto(const Correlation& s, std::size_t m, unsigned sigma);

// Number of free characters: position classes under the character equations
// forced by the periods of s. Disjoint-set union, linear in n.
unsigned nfc(const Correlation& s);

// Lattice recurrence p(v) = sigma^nfc(v) - sum of p over strict supersets,
// computed top-down over the enumerated Gamma_n.
BigInt pop_auto_lattice(const Correlation& s, unsigned sigma);
std::vector<std::pair<Correlation, BigInt>> gamma_population_table(
    std::size_t n, unsigned sigma);

enum class PopMethod { rec1, rec2, nfc, brute };
PopMethod parse_pop_method(std::string_view name);
const char* pop_method_name(PopMethod m);

// Population size of any valid correlation t. All methods agree.
BigInt pop_corr(const Correlation& t, unsigned sigma,
                PopMethod method = PopMethod::rec1,
                const BruteOptions& opts = {});

/// One candidate autocorrelation shape of length 2n from the partition of
/// G(t): lambda = 0 is the plain extension s_2n; lambda >= 1 shapes are
/// (1 0^(lambda/blocks - 1))^blocks 1 0^(2n-lambda-j-1) s.
struct CandidateForm {
  std::size_t lambda = 0;   // position of the last prefix 1-bit
  std::size_t blocks = 0;   // divisor: repeat count of the basic-period block
  Correlation form;
  bool shift_valid = false;  // s[j + 2*lambda - 2n] == 1 (true when lambda = 0)
  bool in_gamma = false;     // form is a realizable autocorrelation
};
std::vector<CandidateForm> g_decomposition(const Correlation& t);

// Right population p_r(t) = p(s) * sigma^(n-j); rejects j = 0.
BigInt pop_right(const Correlation& t, unsigned sigma);

}  // namespace corrpop
