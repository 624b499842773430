#pragma once

#include <optional>

#include "corrpop/words.hpp"

namespace corrpop {

struct WordPair {
  Word u, v;
  friend bool operator==(const WordPair&, const WordPair&) = default;
};

// Lexicographically least binary word whose autocorrelation is s, found by
// searching assignments of the nfc position classes. Throws if s is not
// realizable.
Word realize_autocorrelation(const Correlation& s);
std::optional<Word> try_realize_autocorrelation(const Correlation& s);

// Witness pair over {a, b} with correlation(u, v) = t.
WordPair realize_correlation(const Correlation& t);

bool verify_realization(const Correlation& t, const WordPair& pair);

}  // namespace corrpop
