#include "corrpop/realize.hpp"

#include <algorithm>
#include <numeric>

#include "corrpop/sets.hpp"

namespace corrpop {

namespace {

constexpr unsigned kMaxFreeClasses = 26;  // search space cap, 2^26 candidates

// Position classes under the character equations of s, labelled in order of
// first occurrence. class_of[0] is always 0.
std::vector<std::size_t> position_classes(const Correlation& s,
                                          std::size_t* count) {
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
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> label(n, n);
  std::vector<std::size_t> class_of(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (label[root] == n) label[root] = next++;
    class_of[i] = label[root];
  }
  *count = next;
  return class_of;
}

}  // namespace

std::optional<Word> try_realize_autocorrelation(const Correlation& s) {
  if (s.empty() || !s.bit(0)) return std::nullopt;
  std::size_t n = s.size();
  std::size_t classes = 0;
  auto class_of = position_classes(s, &classes);
  if (classes > kMaxFreeClasses)
    throw BudgetExceeded("realization search space too large");
  // Assignments enumerated in word-lex order: classes are ordered by first
  // occurrence, letter a before b.
  std::vector<std::uint8_t> letters(n);
  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << classes);
       ++assign) {
    for (std::size_t i = 0; i < n; ++i)
      letters[i] = static_cast<std::uint8_t>(
          (assign >> (classes - 1 - class_of[i])) & 1);
    Word w(letters, 2);
    if (autocorrelation(w) == s) return w;
  }
  return std::nullopt;
}

Word realize_autocorrelation(const Correlation& s) {
  auto w = try_realize_autocorrelation(s);
  if (!w)
    throw std::invalid_argument("not a realizable autocorrelation: " + s.str());
  return *w;
}

WordPair realize_correlation(const Correlation& t) {
  if (t.empty())
    throw std::invalid_argument("realization of the empty correlation");
  std::size_t n = t.size();
  if (t.bit(0)) {
    Word w = realize_autocorrelation(t);
    return {w, w};
  }
  auto dec = decompose_correlation(t);
  if (!dec.valid)
    throw std::invalid_argument("not a valid correlation: " + t.str());
  std::size_t j = dec.border_length;
  if (j == 0) {
    // No overlap at all: u = a^n, v = b^n.
    return {Word(std::vector<std::uint8_t>(n, 0), 2),
            Word(std::vector<std::uint8_t>(n, 1), 2)};
  }
  // Main case: w realizes the suffix; pad u with the letter absent from
  // w[0] so w occurs in u only as its suffix, and fix v's free tail.
  Word w = realize_autocorrelation(dec.s);
  std::uint8_t first = w.letters[0];
  std::uint8_t other = first == 0 ? 1 : 0;
  std::vector<std::uint8_t> u(n - j, other), v = w.letters;
  u.insert(u.end(), w.letters.begin(), w.letters.end());
  v.insert(v.end(), n - j, first);
  return {Word(u, 2), Word(v, 2)};
}

bool verify_realization(const Correlation& t, const WordPair& pair) {
  if (pair.u.size() != pair.v.size() || pair.u.size() != t.size())
    throw std::invalid_argument("length mismatch in realization check");
  return correlation(pair.u, pair.v) == t;
}

}  // namespace corrpop
