#include "foxprim/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace foxprim {

void validate_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2, got " + std::to_string(rank));
}

namespace {

void validate_letter(Letter l, int rank) {
  int g = generator_of(l);
  if (l == 0 || g > rank)
    throw std::invalid_argument("letter index " + std::to_string(g) + " outside rank " +
                                std::to_string(rank));
}

std::vector<Letter> reduce_sequence(int rank, std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    validate_letter(l, rank);
    append_reduced(out, l);
  }
  return out;
}

}  // namespace

Word::Word(int rank) : rank_(rank) { validate_rank(rank); }

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  validate_rank(rank);
  letters_ = reduce_sequence(rank, letters);
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

bool Word::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || letters_.front() != inverse_of(letters_.back());
}

void append_reduced(std::vector<Letter>& letters, Letter l) {
  if (!letters.empty() && letters.back() == inverse_of(l))
    letters.pop_back();
  else
    letters.push_back(l);
}

bool shortlex_less(const Word& a, const Word& b) noexcept {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return letter_key(la[i]) < letter_key(lb[i]);
  }
  return false;
}

namespace {

void check_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
  check_same_rank(u, v);
  std::vector<Letter> out = u.letters();
  out.reserve(out.size() + v.length());
  for (Letter l : v.letters()) append_reduced(out, l);
  return Word(u.rank(), out);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(inverse_of(*it));
  return Word(w.rank(), out);
}

Word commutator(const Word& u, const Word& v) {
  check_same_rank(u, v);
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word conjugate(const Word& g, const Word& w) { return multiply(multiply(g, w), invert(g)); }

Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long reps = k < 0 ? -k : k;
  Word out(w.rank());
  for (long long i = 0; i < reps; ++i) out = multiply(out, base);
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse_of(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  Word core(w.rank(), std::span<const Letter>(ls.data() + lo, hi - lo));
  Word conjugator(w.rank(), std::span<const Letter>(ls.data(), lo));
  return {std::move(core), std::move(conjugator)};
}

bool is_prefix_no_cancellation(const Word& g, const Word& w) {
  if (g.length() > w.length()) return false;
  return std::equal(g.letters().begin(), g.letters().end(), w.letters().begin());
}

long long exponent_sum(const Word& w, int i) {
  if (i < 1 || i > w.rank())
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside rank " +
                                std::to_string(w.rank()));
  long long s = 0;
  for (Letter l : w.letters()) {
    if (generator_of(l) == i) s += (l > 0 ? 1 : -1);
  }
  return s;
}

std::vector<long long> exponent_vector(const Word& w) {
  std::vector<long long> v(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) v[static_cast<std::size_t>(generator_of(l) - 1)] += (l > 0 ? 1 : -1);
  return v;
}

int distinct_generator_count(const Word& w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.rank()), false);
  int count = 0;
  for (Letter l : w.letters()) {
    auto g = static_cast<std::size_t>(generator_of(l) - 1);
    if (!seen[g]) {
      seen[g] = true;
      ++count;
    }
  }
  return count;
}

Word canonical_rotation(const Word& w) {
  if (!w.is_cyclically_reduced())
    throw std::invalid_argument("canonical_rotation requires a cyclically reduced word");
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  if (n < 2) return w;
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      int kc = letter_key(ls[(cand + k) % n]);
      int kb = letter_key(ls[(best + k) % n]);
      if (kc != kb) {
        if (kc < kb) best = cand;
        break;
      }
    }
  }
  std::vector<Letter> rotated(n);
  for (std::size_t k = 0; k < n; ++k) rotated[k] = ls[(best + k) % n];
  return Word(w.rank(), rotated);
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("word syntax error at position " + std::to_string(pos) + " in \"" +
                              text + "\": " + what);
}

Word parse_verbose(const std::string& text, int rank) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip_ws();
  if (i < n && text[i] == '1' && (i + 1 == n || text.find_first_not_of(" \t", i + 1) == std::string::npos))
    return Word(rank);
  while (i < n) {
    if (text[i] != 'x') parse_fail(text, i, "expected 'x'");
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      parse_fail(text, i, "expected generator index");
    long idx = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      if (idx > rank) parse_fail(text, i, "generator index exceeds rank " + std::to_string(rank));
      ++i;
    }
    if (idx == 0) parse_fail(text, i, "generator index must be positive");
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        parse_fail(text, i, "expected exponent");
      exp = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1000000) parse_fail(text, i, "exponent too large");
        ++i;
      }
      if (neg) exp = -exp;
    }
    Letter l = static_cast<Letter>(exp >= 0 ? idx : -idx);
    for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) append_reduced(letters, l);
    skip_ws();
  }
  return Word(rank, letters);
}

Word parse_compact(const std::string& text, int rank) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    Letter l;
    if (c >= 'a' && c <= 'z')
      l = static_cast<Letter>(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      l = -static_cast<Letter>(c - 'A' + 1);
    else
      parse_fail(text, i, "expected a letter");
    if (generator_of(l) > rank)
      parse_fail(text, i, "generator index " + std::to_string(generator_of(l)) +
                              " exceeds rank " + std::to_string(rank));
    append_reduced(letters, l);
  }
  return Word(rank, letters);
}

}  // namespace

Word parse_word(const std::string& text, int rank) {
  validate_rank(rank);
  bool verbose = text.find_first_of("0123456789^*") != std::string::npos;
  return verbose ? parse_verbose(text, rank) : parse_compact(text, rank);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  if (w.rank() > 26) return format_word_verbose(w);
  std::string out;
  out.reserve(w.length());
  for (Letter l : w.letters())
    out.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  return out;
}

std::string format_word_verbose(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long exp = static_cast<long long>(j - i) * (ls[i] > 0 ? 1 : -1);
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(generator_of(ls[i]));
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

WordEnumerator::WordEnumerator(int rank, std::size_t max_len) : rank_(rank), max_len_(max_len) {
  validate_rank(rank);
}

bool WordEnumerator::advance_same_length() {
  // Odometer over letter keys, skipping cancellations with the previous letter.
  std::size_t pos = cur_.size();
  while (pos > 0) {
    --pos;
    int key = letter_key(cur_[pos]);
    bool moved = false;
    while (++key < 2 * rank_) {
      Letter cand = letter_from_key(key);
      if (pos == 0 || cur_[pos - 1] != inverse_of(cand)) {
        cur_[pos] = cand;
        moved = true;
        break;
      }
    }
    if (!moved) continue;
    // refill positions after pos with the smallest valid letters
    for (std::size_t p = pos + 1; p < cur_.size(); ++p) {
      for (int k = 0; k < 2 * rank_; ++k) {
        Letter cand = letter_from_key(k);
        if (cur_[p - 1] != inverse_of(cand)) {
          cur_[p] = cand;
          break;
        }
      }
    }
    return true;
  }
  return false;
}

std::optional<Word> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Word(rank_);  // the identity, length 0
  }
  if (len_ > 0 && advance_same_length())
    return Word(rank_, cur_);
  // move to the first word of the next length
  ++len_;
  if (len_ > max_len_) {
    done_ = true;
    return std::nullopt;
  }
  cur_.assign(len_, 0);
  for (std::size_t p = 0; p < len_; ++p) {
    for (int k = 0; k < 2 * rank_; ++k) {
      Letter cand = letter_from_key(k);
      if (p == 0 || cur_[p - 1] != inverse_of(cand)) {
        cur_[p] = cand;
        break;
      }
    }
  }
  return Word(rank_, cur_);
}

}  // namespace foxprim
