#include <doctest.h>

#include "corrpop/sets.hpp"
#include "corrpop/words.hpp"

using namespace corrpop;

namespace {

Word word_from_code(std::uint64_t code, std::size_t n, unsigned sigma) {
  std::vector<std::uint8_t> letters(n);
  for (std::size_t i = n; i-- > 0;) {
    letters[i] = static_cast<std::uint8_t>(code % sigma);
    code /= sigma;
  }
  return Word(std::move(letters), sigma);
}

}  // namespace

TEST_CASE("correlation text form and parsing") {
  Correlation t = Correlation::parse("000101");
  CHECK(t.size() == 6);
  CHECK(t.str() == "000101");
  CHECK_FALSE(t.bit(0));
  CHECK(t.bit(3));
  CHECK(t.bit(5));
  CHECK(t.popcount() == 2);
  CHECK(t.leading_zeros() == 3);
  CHECK(t.suffix(3).str() == "101");
  CHECK(Correlation::parse("").empty());
  CHECK(Correlation::ones(4).str() == "1111");
  CHECK_THROWS_AS(Correlation::parse("01x1"), std::invalid_argument);
}

TEST_CASE("correlation ordering is lexicographic on the printed string") {
  CHECK(Correlation::parse("0001") < Correlation::parse("0010"));
  CHECK(Correlation::parse("0111") < Correlation::parse("1000"));
  CHECK(Correlation::parse("10") < Correlation::parse("11"));
}

TEST_CASE("word parsing") {
  CHECK(Word::parse("abba").letters == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(Word::parse("abba").sigma == 2);
  CHECK(Word::parse("0,1,2").letters == std::vector<std::uint8_t>{0, 1, 2});
  CHECK(Word::parse("0,1,2").sigma == 3);
  CHECK(Word::parse("abc", 5).sigma == 5);
  CHECK(Word::parse("abba").str() == "abba");
  CHECK_THROWS_AS(Word::parse("abc", 2), std::invalid_argument);
}

TEST_CASE("correlation of word pairs") {
  CHECK(correlation(Word::parse("aabbab"), Word::parse("babbaa")).str() ==
        "000101");
  CHECK(correlation(Word::parse("babbaa"), Word::parse("aabbab")).str() ==
        "000011");
  CHECK(correlation(Word::parse("abaaa"), Word::parse("aaabb")).str() ==
        "00111");
  CHECK_THROWS_AS(correlation(Word::parse("ab"), Word::parse("abc", 2)),
                  std::invalid_argument);
}

TEST_CASE("autocorrelation") {
  CHECK(autocorrelation(Word::parse("aaaa")).str() == "1111");
  CHECK(autocorrelation(Word::parse("abab")).str() == "1010");
  CHECK(autocorrelation(Word::parse("abbab")).str() == "10010");
}

TEST_CASE("borders") {
  auto to_strings = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(w.str());
    return out;
  };
  CHECK(to_strings(borders(Word::parse("abaaa"), Word::parse("aaabb"))) ==
        std::vector<std::string>{"aaa", "aa", "a"});
  CHECK(to_strings(borders(Word::parse("aaabb"), Word::parse("abbbb"))) ==
        std::vector<std::string>{"abb"});
  CHECK(borders(Word::parse("aaabb"), Word::parse("abaaa")).empty());
}

TEST_CASE("period set") {
  CHECK(period_set(Word::parse("abab")) == std::vector<unsigned>{0, 2});
  CHECK(period_set(Word::parse("aaaa")) == std::vector<unsigned>{0, 1, 2, 3});
  CHECK(period_set(Word::parse("abbab")) == std::vector<unsigned>{0, 3});
}

TEST_CASE("brute-force population oracle") {
  CHECK(brute_population(Correlation::parse("01010"), 2) == 8);
  CHECK(brute_population(Correlation::parse("0000"), 2) == 74);
  CHECK(brute_population(Correlation::parse("1111"), 5) == 5);
}

TEST_CASE("brute-force g oracle") {
  CHECK(brute_g(Correlation::parse("0000"), 2) == 74);
  CHECK(brute_g(Correlation::parse("111"), 2) == 2);
  CHECK(brute_g(Correlation::parse("01010"), 2) == 8);
}

TEST_CASE("budget guard") {
  BruteOptions tiny{100, 1};
  CHECK_THROWS_AS(brute_population(Correlation::parse("0000"), 2, tiny),
                  BudgetExceeded);
}

TEST_CASE("oracles are deterministic across thread counts") {
  for (unsigned threads : {1u, 2u, 3u, 7u}) {
    BruteOptions opts{kDefaultBruteBudget, threads};
    CHECK(brute_population_table(4, 2, opts) == brute_population_table(4, 2));
    CHECK(brute_g_table(4, 2, opts) == brute_g_table(4, 2));
  }
}

TEST_CASE("bit 0 is set exactly for equal pairs") {
  const std::size_t n = 4;
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      Word u = word_from_code(a, n, 2), v = word_from_code(b, n, 2);
      CHECK(correlation(u, v).bit(0) == (u == v));
    }
}

TEST_CASE("suffix stability under extension") {
  // The length-n suffix of c(xu, vy) equals c(u, v) for |x| = |y| = k.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      // Deterministic sample of (u, v, x, y) tuples.
      for (std::uint64_t seed = 0; seed < 64; ++seed) {
        std::uint64_t h = seed * 0x9e3779b97f4a7c15ull + n * 131 + k;
        Word u = word_from_code(h & ((1u << n) - 1), n, 2);
        Word v = word_from_code((h >> 8) & ((1u << n) - 1), n, 2);
        Word x = word_from_code((h >> 16) & ((1u << k) - 1), k, 2);
        Word y = word_from_code((h >> 24) & ((1u << k) - 1), k, 2);
        Word xu(x.letters, 2), vy(v.letters, 2);
        xu.letters.insert(xu.letters.end(), u.letters.begin(), u.letters.end());
        vy.letters.insert(vy.letters.end(), y.letters.begin(), y.letters.end());
        CHECK(correlation(xu, vy).suffix(n) == correlation(u, v));
      }
    }
  }
}

TEST_CASE("border count equals popcount of the correlation") {
  const std::size_t n = 5;
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      Word u = word_from_code(a, n, 2), v = word_from_code(b, n, 2);
      CHECK(borders(u, v).size() == correlation(u, v).popcount());
    }
}

TEST_CASE("border inheritance from the autocorrelation of vu") {
  const std::size_t n = 5;
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      Word u = word_from_code(a, n, 2), v = word_from_code(b, n, 2);
      Word vu(v.letters, 2);
      vu.letters.insert(vu.letters.end(), u.letters.begin(), u.letters.end());
      Correlation s = autocorrelation(vu);
      bool nontrivial = false;
      for (std::size_t i = 1; i < s.size(); ++i) nontrivial |= s.bit(i);
      if (nontrivial) CHECK_FALSE(borders(u, v).empty());
    }
}

TEST_CASE("forward period propagation in autocorrelations") {
  const std::size_t n = 8;
  for (std::uint64_t a = 0; a < (1u << n); ++a) {
    Correlation s = autocorrelation(word_from_code(a, n, 2));
    for (std::size_t p = 1; p < n; ++p)
      if (s.bit(p))
        for (std::size_t kp = p; kp < n; kp += p) CHECK(s.bit(kp));
  }
}

TEST_CASE("brute populations sum to sigma^2n") {
  for (unsigned sigma : {2u, 3u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      BigInt sum = 0;
      for (const auto& [t, p] : brute_population_table(n, sigma)) sum += p;
      CHECK(sum == pow_int(sigma, 2 * n));
    }
  }
}
