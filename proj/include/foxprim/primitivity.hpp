#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foxprim/whitehead.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// True iff w belongs to a free basis: its Whitehead-minimal length is 1.
/// Fast-fail: the exponent-sum vector must have gcd 1.
[[nodiscard]] bool is_primitive(const Word& w);

/// Necessary condition for primitivity in rank 2: in the cyclic reduction,
/// some occurring generator has all its cyclic syllable exponents equal to
/// +1, or all equal to -1.
[[nodiscard]] bool cmz_necessary_condition(const Word& w);

/// Streams all cyclically reduced primitive words of F_2 of length <=
/// max_len, in shortlex order.
class PrimitiveEnumeratorF2 {
 public:
  explicit PrimitiveEnumeratorF2(std::size_t max_len);
  std::optional<Word> next();

 private:
  WordEnumerator words_;
};

struct BlockingVerdict {
  enum class Kind { Extendable, BlockedUpTo, BlockedProven };
  Kind kind;
  std::optional<Word> witness;  // Extendable: a cyclically reduced primitive
                                // with the query as no-cancellation prefix
  std::size_t bound = 0;        // length bound that was searched
  std::string rule;             // BlockedProven: which certified family
  std::uint64_t nodes = 0;      // extension words tested

  [[nodiscard]] bool blocked() const { return kind != Kind::Extendable; }
};

/// Decides whether some cyclically reduced primitive has g as a
/// no-cancellation prefix. In rank 2 the two certified families (commutators
/// of distinct letters, and a^k b^l with k, l >= 2 up to relabeling) return
/// BlockedProven without search; everything else is breadth-first extension
/// search up to max_len, returning Extendable with the shortlex-first
/// witness or BlockedUpTo(max_len).
[[nodiscard]] BlockingVerdict blocking_verdict(const Word& g, std::size_t max_len);

/// Least letterwise image of w under signed generator permutations; used to
/// cut candidate sets by symmetry (a word and its relabelings block alike).
[[nodiscard]] Word hyperoctahedral_canonical(const Word& w);

struct BlockingEntry {
  Word candidate;
  BlockingVerdict verdict;
};

struct BlockingReport {
  int rank = 3;
  std::size_t cand_len = 0;
  std::size_t max_len = 0;
  std::vector<BlockingEntry> entries;  // canonical candidates, shortlex order
  std::vector<Word> survivors;         // candidates blocked up to max_len
  std::uint64_t total_nodes = 0;
  std::size_t resumed_entries = 0;
};

/// Runs blocking_verdict over every cyclically reduced word of length 1 ..
/// cand_len modulo signed generator permutations. Survivors (candidates with
/// no witness up to max_len) are reported for deeper search; nothing is ever
/// claimed to be blocked outright. Requires rank >= 3 (rank 2 has proven
/// blocking words). Progress is checkpointed to checkpoint_path when given,
/// and previously completed candidates are loaded from resume_path.
[[nodiscard]] BlockingReport blocking_search(int rank, std::size_t cand_len, std::size_t max_len,
                                             int workers = 1,
                                             const std::string& checkpoint_path = "",
                                             const std::string& resume_path = "");

/// Serialized search progress: candidates already decided, with a content
/// hash guarding against corruption.
struct Checkpoint {
  int rank = 0;
  std::size_t cand_len = 0;
  std::size_t max_len = 0;
  std::vector<BlockingEntry> entries;
};

void save_checkpoint(const Checkpoint& cp, const std::string& path);

/// Throws std::runtime_error on missing file, hash mismatch, or truncation.
[[nodiscard]] Checkpoint load_checkpoint(const std::string& path);

}  // namespace foxprim
