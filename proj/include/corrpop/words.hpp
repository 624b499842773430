#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corrpop/bigint.hpp"

namespace corrpop {

// Thrown when a brute-force enumeration would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bit vector of overlap positions for an ordered word pair. Bit i is the
/// shift-i bit; the text form prints bit 0 first ("000101").
class Correlation {
 public:
  static constexpr std::size_t kMaxLength = 64;

  Correlation() = default;  // the empty correlation (length 0)
  Correlation(std::size_t length, std::uint64_t bits);

  static Correlation parse(std::string_view text);
  static Correlation zeros(std::size_t n) { return Correlation(n, 0); }
  static Correlation ones(std::size_t n);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool bit(std::size_t i) const;
  std::uint64_t raw() const { return bits_; }
  std::size_t popcount() const;
  // Number of 0-bits before the first 1 (== size() when all zero).
  std::size_t leading_zeros() const;
  Correlation suffix(std::size_t len) const;
  bool subset_of(const Correlation& other) const;
  std::string str() const;

  friend Correlation operator&(const Correlation& a, const Correlation& b);
  friend Correlation operator|(const Correlation& a, const Correlation& b);
  friend bool operator==(const Correlation&, const Correlation&) = default;
  // Lexicographic order on the printed bit string.
  std::strong_ordering operator<=>(const Correlation& other) const;

 private:
  std::size_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// A word over a sigma-ary alphabet; letters are indices in [0, sigma).
struct Word {
  std::vector<std::uint8_t> letters;
  unsigned sigma = 2;

  Word() = default;
  Word(std::vector<std::uint8_t> l, unsigned s);
  // "abba" -> {0,1,1,0}; "0,1,2" -> {0,1,2}. sigma 0 means infer
  // (max letter + 1, at least 2).
  static Word parse(std::string_view text, unsigned sigma = 0);

  std::size_t size() const { return letters.size(); }
  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;
  auto operator<=>(const Word&) const = default;
};

Correlation correlation(const Word& u, const Word& v);
Correlation autocorrelation(const Word& u);
std::vector<Word> borders(const Word& u, const Word& v);
std::vector<unsigned> period_set(const Word& u);

inline constexpr std::uint64_t kDefaultBruteBudget = std::uint64_t{1} << 32;

struct BruteOptions {
  std::uint64_t budget = kDefaultBruteBudget;
  unsigned threads = 1;
};

// Exhaustive oracles. All enumerate sigma^(2n) objects and refuse beyond
// the budget. Deterministic regardless of thread count.
BigInt brute_population(const Correlation& t, unsigned sigma,
                        const BruteOptions& opts = {});
BigInt brute_g(const Correlation& t, unsigned sigma,
               const BruteOptions& opts = {});
std::map<Correlation, BigInt> brute_population_table(
    std::size_t n, unsigned sigma, const BruteOptions& opts = {});
std::map<Correlation, BigInt> brute_g_table(std::size_t n, unsigned sigma,
                                            const BruteOptions& opts = {});
std::vector<std::pair<Word, Word>> brute_population_pairs(
    const Correlation& t, unsigned sigma, const BruteOptions& opts = {});

}  // namespace corrpop
