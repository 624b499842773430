#include <doctest.h>

#include <cmath>

#include "corrpop/sets.hpp"

using namespace corrpop;

namespace {

std::vector<std::string> strs(const std::vector<Correlation>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.str());
  return out;
}

}  // namespace

TEST_CASE("gamma enumeration") {
  CHECK(strs(enumerate_gamma(4).members) ==
        std::vector<std::string>{"1000", "1001", "1010", "1111"});
  CHECK(strs(enumerate_gamma(1).members) == std::vector<std::string>{"1"});
  CHECK(strs(enumerate_gamma(2).members) ==
        std::vector<std::string>{"10", "11"});
  CHECK(enumerate_gamma(0).members == std::vector<Correlation>{Correlation()});
}

TEST_CASE("delta enumeration") {
  CHECK(strs(enumerate_delta(4).members) ==
        std::vector<std::string>{"0000", "0001", "0010", "0011", "0100",
                                 "0101", "0111", "1000", "1001", "1010",
                                 "1111"});
  CHECK(strs(enumerate_delta(1).members) == std::vector<std::string>{"0", "1"});
  CHECK(enumerate_delta(5).contains(Correlation::parse("01010")));
}

TEST_CASE("correlation decomposition") {
  auto d = decompose_correlation(Correlation::parse("000101"));
  CHECK(d.valid);
  CHECK(d.border_length == 3);
  CHECK(d.s.str() == "101");
  CHECK_FALSE(decompose_correlation(Correlation::parse("0110")).valid);
  CHECK_FALSE(decompose_correlation(Correlation::parse("1011")).valid);
  CHECK(decompose_correlation(Correlation::parse("0000")).border_length == 0);
}

TEST_CASE("cardinalities") {
  auto rows = cardinalities(8);
  CHECK(rows[0].kappa == 1);
  CHECK(rows[0].delta == 1);
  CHECK(rows[4].kappa == 4);
  CHECK(rows[4].delta == 11);
  // delta_n = sum of kappa_j, and the brute-force sizes match the table.
  std::uint64_t running = 0;
  for (const auto& row : rows) {
    running += row.kappa;
    CHECK(row.delta == running);
    CHECK(row.kappa == enumerate_gamma(row.n).members.size());
    if (row.n >= 2)
      CHECK(row.normalized_kappa ==
            doctest::Approx(std::log(static_cast<double>(row.kappa)) /
                            (std::log(row.n) * std::log(row.n))));
  }
}

TEST_CASE("gamma members start with a 1-bit and sit inside delta") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const GammaSet& gamma = enumerate_gamma(n);
    DeltaSet delta = enumerate_delta(n);
    CHECK(gamma.members.size() < delta.members.size());
    std::size_t with_bit0 = 0;
    for (const Correlation& t : delta.members)
      if (t.bit(0)) {
        ++with_bit0;
        CHECK(gamma.contains(t));
      }
    CHECK(with_bit0 == gamma.members.size());
    for (const Correlation& s : gamma.members) CHECK(s.bit(0));
  }
}

TEST_CASE("validity agrees with delta membership over all bit vectors") {
  for (std::size_t n = 1; n <= 12; ++n) {
    DeltaSet delta = enumerate_delta(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Correlation t(n, bits);
      CHECK(decompose_correlation(t).valid == delta.contains(t));
    }
  }
}

TEST_CASE("alphabet independence of gamma") {
  for (std::size_t n = 1; n <= 8; ++n) {
    GammaSet ternary = enumerate_gamma_sigma(n, 3);
    CHECK(ternary.members == enumerate_gamma(n).members);
  }
}

TEST_CASE("basic period dichotomy inside gamma") {
  // Every period p is a multiple of the basic period pi or exceeds n - pi.
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Correlation& s : enumerate_gamma(n).members) {
      std::size_t pi = n;
      for (std::size_t p = 1; p < n; ++p)
        if (s.bit(p)) {
          pi = p;
          break;
        }
      for (std::size_t p = 1; p < n; ++p)
        if (s.bit(p)) CHECK((p % pi == 0 || p > n - pi));
    }
  }
}

TEST_CASE("enumeration cap is enforced") {
  CHECK_THROWS_AS(enumerate_gamma(25, 20), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_delta(25, 20), std::invalid_argument);
}
