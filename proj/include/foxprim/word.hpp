#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foxprim {

/// A letter of a free group: +g encodes the generator x_g, -g its inverse
/// (generator indices are 1-based).
using Letter = std::int32_t;

[[nodiscard]] constexpr int generator_of(Letter l) noexcept { return l > 0 ? l : -l; }
[[nodiscard]] constexpr Letter inverse_of(Letter l) noexcept { return -l; }

/// Position of a letter in the canonical order x1 < x1^-1 < x2 < x2^-1 < ...
[[nodiscard]] constexpr int letter_key(Letter l) noexcept {
  return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0);
}

[[nodiscard]] constexpr Letter letter_from_key(int key) noexcept {
  Letter g = static_cast<Letter>(key / 2 + 1);
  return key % 2 == 0 ? g : -g;
}

/// Throws std::invalid_argument unless rank >= 2.
void validate_rank(int rank);

/// A freely reduced word over the generators of a free group of the given
/// rank. The empty word is the identity. Reduction is performed eagerly in
/// every constructor; an unreduced letter sequence never escapes.
class Word {
 public:
  Word() = default;

  /// The identity of the given rank.
  explicit Word(int rank);

  /// Builds the free reduction of the given letter sequence.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  [[nodiscard]] bool is_identity() const noexcept { return letters_.empty(); }

  [[nodiscard]] bool is_cyclically_reduced() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 2;
  std::vector<Letter> letters_;
};

/// Shortlex: length first, then the letter order x1 < x1^-1 < x2 < ...
/// This is the global canonical order used for enumeration and display.
[[nodiscard]] bool shortlex_less(const Word& a, const Word& b) noexcept;

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const noexcept { return shortlex_less(a, b); }
};

inline bool operator<(const Word& a, const Word& b) noexcept { return shortlex_less(a, b); }

/// Appends a letter to a reduced letter sequence, cancelling if possible.
void append_reduced(std::vector<Letter>& letters, Letter l);

[[nodiscard]] Word multiply(const Word& u, const Word& v);
[[nodiscard]] Word invert(const Word& w);

/// [u, v] = u v u^-1 v^-1.
[[nodiscard]] Word commutator(const Word& u, const Word& v);

/// g w g^-1.
[[nodiscard]] Word conjugate(const Word& g, const Word& w);

[[nodiscard]] Word power(const Word& w, long long k);

/// Decomposition w = conjugator * core * conjugator^-1 with core cyclically
/// reduced; reassembly reproduces w exactly.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

[[nodiscard]] CyclicReduction cyclic_reduce(const Word& w);

/// True iff w = g h as plain letter sequences (|w| = |g| + |h|).
[[nodiscard]] bool is_prefix_no_cancellation(const Word& g, const Word& w);

/// Signed count of occurrences of x_i in w.
[[nodiscard]] long long exponent_sum(const Word& w, int i);

/// All n exponent sums at once.
[[nodiscard]] std::vector<long long> exponent_vector(const Word& w);

/// Number of distinct generators occurring in w.
[[nodiscard]] int distinct_generator_count(const Word& w);

/// Lexicographically least rotation of a cyclically reduced word.
[[nodiscard]] Word canonical_rotation(const Word& w);

/// Parses either compact form ("abAB": a..z are x1..x26, uppercase inverse)
/// or verbose form ("x1*x2^-1"); whitespace is ignored. Throws
/// std::invalid_argument with the offending position on bad syntax and on
/// generator indices exceeding the rank.
[[nodiscard]] Word parse_word(const std::string& text, int rank);

/// Canonical compact form when rank <= 26, verbose form otherwise.
/// The identity prints as "1".
[[nodiscard]] std::string format_word(const Word& w);

/// Verbose form with exponent runs collapsed, e.g. "x1^2*x2^-1".
[[nodiscard]] std::string format_word_verbose(const Word& w);

/// Streams every freely reduced word of length <= max_len exactly once, in
/// shortlex order.
class WordEnumerator {
 public:
  WordEnumerator(int rank, std::size_t max_len);

  /// Next word, or nullopt when exhausted.
  std::optional<Word> next();

 private:
  int rank_;
  std::size_t max_len_;
  std::size_t len_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<Letter> cur_;

  bool advance_same_length();
};

}  // namespace foxprim
