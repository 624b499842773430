#pragma once

#include <cstddef>
#include <vector>

#include "corrpop/words.hpp"

namespace corrpop {

inline constexpr std::size_t kDefaultEnumCap = 20;

/// Gamma_n: all autocorrelations of length-n words, sorted lexicographically.
/// Alphabet-independent; the binary enumeration is canonical.
struct GammaSet {
  std::size_t n = 0;
  std::vector<Correlation> members;
  bool contains(const Correlation& s) const;
};

/// Delta_n: all correlations of ordered pairs of length-n words.
struct DeltaSet {
  std::size_t n = 0;
  std::vector<Correlation> members;
  bool contains(const Correlation& t) const;
};

// Memoized per process; thread-safe.
const GammaSet& enumerate_gamma(std::size_t n, std::size_t cap = kDefaultEnumCap);
DeltaSet enumerate_delta(std::size_t n, std::size_t cap = kDefaultEnumCap);

// Non-memoized enumeration over an arbitrary alphabet (alphabet-independence
// checks only; sigma = 2 is the canonical route).
GammaSet enumerate_gamma_sigma(std::size_t n, unsigned sigma,
                               const BruteOptions& opts = {});

/// t = 0^(n-j) s with s in Gamma_j, when valid.
struct CorrelationDecomposition {
  bool valid = false;
  std::size_t border_length = 0;  // j
  Correlation s;                  // suffix in Gamma_j
};
CorrelationDecomposition decompose_correlation(const Correlation& t);

struct CardinalityRow {
  std::size_t n = 0;
  std::uint64_t kappa = 0;
  std::uint64_t delta = 0;
  double normalized_kappa = 0.0;  // ln(kappa_n) / ln^2(n), 0 for n < 2
};
std::vector<CardinalityRow> cardinalities(std::size_t n_max,
                                          std::size_t cap = kDefaultEnumCap);

}  // namespace corrpop
