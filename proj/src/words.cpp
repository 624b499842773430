#include "corrpop/words.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace corrpop {

Correlation::Correlation(std::size_t length, std::uint64_t bits)
    : length_(length), bits_(bits) {
  if (length > kMaxLength)
    throw std::invalid_argument("correlation length exceeds 64");
  if (length < kMaxLength && (bits >> length) != 0)
    throw std::invalid_argument("correlation bits out of range");
}

Correlation Correlation::parse(std::string_view text) {
  if (text.size() > kMaxLength)
    throw std::invalid_argument("correlation length exceeds 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw std::invalid_argument("correlation must be a 0/1 string");
  }
  return Correlation(text.size(), bits);
}

Correlation Correlation::ones(std::size_t n) {
  if (n > kMaxLength) throw std::invalid_argument("correlation length exceeds 64");
  return Correlation(n, n == kMaxLength ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n) - 1);
}

bool Correlation::bit(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("correlation bit index");
  return (bits_ >> i) & 1;
}

std::size_t Correlation::popcount() const { return std::popcount(bits_); }

std::size_t Correlation::leading_zeros() const {
  if (bits_ == 0) return length_;
  return static_cast<std::size_t>(std::countr_zero(bits_));
}

Correlation Correlation::suffix(std::size_t len) const {
  if (len > length_) throw std::out_of_range("suffix longer than correlation");
  return Correlation(len, bits_ >> (length_ - len));
}

bool Correlation::subset_of(const Correlation& other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("subset test requires equal lengths");
  return (bits_ & ~other.bits_) == 0;
}

std::string Correlation::str() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if ((bits_ >> i) & 1) s[i] = '1';
  return s;
}

Correlation operator&(const Correlation& a, const Correlation& b) {
  if (a.length_ != b.length_)
    throw std::invalid_argument("bitwise AND requires equal lengths");
  return Correlation(a.length_, a.bits_ & b.bits_);
}

Correlation operator|(const Correlation& a, const Correlation& b) {
  if (a.length_ != b.length_)
    throw std::invalid_argument("bitwise OR requires equal lengths");
  return Correlation(a.length_, a.bits_ | b.bits_);
}

std::strong_ordering Correlation::operator<=>(const Correlation& other) const {
  std::size_t common = std::min(length_, other.length_);
  for (std::size_t i = 0; i < common; ++i) {
    bool a = (bits_ >> i) & 1, b = (other.bits_ >> i) & 1;
    if (a != b) return a ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return length_ <=> other.length_;
}

Word::Word(std::vector<std::uint8_t> l, unsigned s) : letters(std::move(l)), sigma(s) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  for (auto c : letters)
    if (c >= sigma) throw std::invalid_argument("letter index out of alphabet");
}

Word Word::parse(std::string_view text, unsigned sigma) {
  std::vector<std::uint8_t> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      int v = std::stoi(std::string(text.substr(pos, next - pos)));
      if (v < 0 || v > 255) throw std::invalid_argument("letter index out of range");
      letters.push_back(static_cast<std::uint8_t>(v));
      pos = next + 1;
      if (next == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c < 'a' || c > 'z')
        throw std::invalid_argument("letters must be a..z");
      letters.push_back(static_cast<std::uint8_t>(c - 'a'));
    }
  }
  if (sigma == 0) {
    unsigned max_letter = 0;
    for (auto c : letters) max_letter = std::max<unsigned>(max_letter, c);
    sigma = std::max(2u, max_letter + 1);
  }
  return Word(std::move(letters), sigma);
}

std::string Word::str() const {
  if (sigma <= 26) {
    std::string s;
    for (auto c : letters) s.push_back(static_cast<char>('a' + c));
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(letters[i]);
  }
  return s;
}

Correlation correlation(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("correlation requires equal lengths");
  if (u.sigma != v.sigma)
    throw std::invalid_argument("correlation requires a shared alphabet");
  std::size_t n = u.size();
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool match = true;
    for (std::size_t k = 0; k + i < n; ++k) {
      if (u.letters[i + k] != v.letters[k]) { match = false; break; }
    }
    if (match) bits |= std::uint64_t{1} << i;
  }
  return Correlation(n, bits);
}

Correlation autocorrelation(const Word& u) { return correlation(u, u); }

std::vector<Word> borders(const Word& u, const Word& v) {
  Correlation c = correlation(u, v);
  std::vector<Word> result;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c.bit(i)) continue;
    std::vector<std::uint8_t> suf(u.letters.begin() + static_cast<long>(i),
                                  u.letters.end());
    result.emplace_back(std::move(suf), u.sigma);
  }
  return result;
}

std::vector<unsigned> period_set(const Word& u) {
  if (u.size() == 0) throw std::invalid_argument("period set of empty word");
  Correlation a = autocorrelation(u);
  std::vector<unsigned> periods;
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a.bit(p)) periods.push_back(static_cast<unsigned>(p));
  return periods;
}

namespace {

// Decodes code as a base-sigma word, least-significant digit = letter 0.
void decode_word(std::uint64_t code, unsigned sigma, std::size_t n,
                 std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>(code % sigma);
    code /= sigma;
  }
}

std::uint64_t corr_bits(const std::uint8_t* u, const std::uint8_t* v,
                        std::size_t n) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool match = true;
    for (std::size_t k = 0; k + i < n; ++k)
      if (u[i + k] != v[k]) { match = false; break; }
    if (match) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

std::uint64_t checked_pow(unsigned sigma, std::size_t e, std::uint64_t budget) {
  BigInt total = pow_int(sigma, e);
  if (total > budget)
    throw BudgetExceeded("enumeration of sigma^" + std::to_string(e) +
                         " exceeds budget " + std::to_string(budget));
  return total.convert_to<std::uint64_t>();
}

void check_brute_pre(std::size_t n, unsigned sigma) {
  if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (n == 0) throw std::invalid_argument("word length must be >= 1");
}

// Runs fn(first, last, slot) on `threads` disjoint code ranges; results are
// merged in slot order so the outcome is independent of scheduling.
template <typename Fn>
std::vector<std::map<Correlation, BigInt>> partitioned_counts(
    std::uint64_t total, unsigned threads, Fn fn) {
  threads = std::max(1u, threads);
  std::vector<std::map<Correlation, BigInt>> slots(threads);
  if (threads == 1) {
    fn(0, total, slots[0]);
    return slots;
  }
  std::vector<std::thread> workers;
  std::uint64_t chunk = total / threads + 1;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t first = std::min<std::uint64_t>(total, w * chunk);
    std::uint64_t last = std::min<std::uint64_t>(total, first + chunk);
    workers.emplace_back([&, first, last, w] { fn(first, last, slots[w]); });
  }
  for (auto& t : workers) t.join();
  return slots;
}

std::map<Correlation, BigInt> merge_counts(
    std::vector<std::map<Correlation, BigInt>>& slots) {
  std::map<Correlation, BigInt> out;
  for (auto& slot : slots)
    for (auto& [corr, count] : slot) out[corr] += count;
  return out;
}

}  // namespace

std::map<Correlation, BigInt> brute_population_table(std::size_t n,
                                                     unsigned sigma,
                                                     const BruteOptions& opts) {
  check_brute_pre(n, sigma);
  checked_pow(sigma, 2 * n, opts.budget);
  std::uint64_t per_word = checked_pow(sigma, n, opts.budget);
  auto slots = partitioned_counts(
      per_word, opts.threads,
      [&](std::uint64_t first, std::uint64_t last,
          std::map<Correlation, BigInt>& counts) {
        std::vector<std::uint8_t> u(n), v(n);
        for (std::uint64_t uc = first; uc < last; ++uc) {
          decode_word(uc, sigma, n, u.data());
          for (std::uint64_t vc = 0; vc < per_word; ++vc) {
            decode_word(vc, sigma, n, v.data());
            counts[Correlation(n, corr_bits(u.data(), v.data(), n))] += 1;
          }
        }
      });
  return merge_counts(slots);
}

BigInt brute_population(const Correlation& t, unsigned sigma,
                        const BruteOptions& opts) {
  std::size_t n = t.size();
  check_brute_pre(n, sigma);
  checked_pow(sigma, 2 * n, opts.budget);
  std::uint64_t per_word = checked_pow(sigma, n, opts.budget);
  auto slots = partitioned_counts(
      per_word, opts.threads,
      [&](std::uint64_t first, std::uint64_t last,
          std::map<Correlation, BigInt>& counts) {
        std::vector<std::uint8_t> u(n), v(n);
        for (std::uint64_t uc = first; uc < last; ++uc) {
          decode_word(uc, sigma, n, u.data());
          for (std::uint64_t vc = 0; vc < per_word; ++vc) {
            decode_word(vc, sigma, n, v.data());
            if (corr_bits(u.data(), v.data(), n) == t.raw()) counts[t] += 1;
          }
        }
      });
  auto merged = merge_counts(slots);
  auto it = merged.find(t);
  return it == merged.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Word, Word>> brute_population_pairs(
    const Correlation& t, unsigned sigma, const BruteOptions& opts) {
  std::size_t n = t.size();
  check_brute_pre(n, sigma);
  checked_pow(sigma, 2 * n, opts.budget);
  std::uint64_t per_word = checked_pow(sigma, n, opts.budget);
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<std::uint8_t> u(n), v(n);
  for (std::uint64_t uc = 0; uc < per_word; ++uc) {
    decode_word(uc, sigma, n, u.data());
    for (std::uint64_t vc = 0; vc < per_word; ++vc) {
      decode_word(vc, sigma, n, v.data());
      if (corr_bits(u.data(), v.data(), n) == t.raw())
        pairs.emplace_back(Word(u, sigma), Word(v, sigma));
    }
  }
  return pairs;
}

std::map<Correlation, BigInt> brute_g_table(std::size_t n, unsigned sigma,
                                            const BruteOptions& opts) {
  check_brute_pre(n, sigma);
  std::uint64_t total = checked_pow(sigma, 2 * n, opts.budget);
  auto slots = partitioned_counts(
      total, opts.threads,
      [&](std::uint64_t first, std::uint64_t last,
          std::map<Correlation, BigInt>& counts) {
        std::vector<std::uint8_t> w(2 * n);
        for (std::uint64_t wc = first; wc < last; ++wc) {
          decode_word(wc, sigma, 2 * n, w.data());
          std::uint64_t bits = corr_bits(w.data(), w.data(), 2 * n);
          counts[Correlation(2 * n, bits).suffix(n)] += 1;
        }
      });
  return merge_counts(slots);
}

BigInt brute_g(const Correlation& t, unsigned sigma, const BruteOptions& opts) {
  auto table = brute_g_table(t.size(), sigma, opts);
  auto it = table.find(t);
  return it == table.end() ? BigInt(0) : it->second;
}

}  // namespace corrpop
