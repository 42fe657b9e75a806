#pragma once

#include <cstdint>
#include <vector>

#include "foxprim/endomorphism.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// An elementary Nielsen transformation of a word tuple.
struct NielsenMove {
  enum class Kind : std::uint8_t {
    Invert,    // w_i <- w_i^-1
    Swap,      // exchange positions i and j
    MulRight,  // w_i <- w_i * w_j^sign
    MulLeft,   // w_i <- w_j^sign * w_i
  };
  Kind kind;
  int i = 0;  // 0-based positions
  int j = 0;
  int sign = 1;

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

void apply_nielsen_move(std::vector<Word>& tuple, const NielsenMove& m);

struct NielsenReduction {
  std::vector<Word> tuple;
  std::vector<NielsenMove> log;  // replaying on the input yields `tuple`
};

/// Applies elementary Nielsen transformations until no sequence of
/// length-preserving product moves enables a further decrease of the total
/// length (plateaus are searched exhaustively up to a node budget), then
/// normalizes each entry to the shortlex-smaller of itself and its inverse.
[[nodiscard]] NielsenReduction nielsen_reduce(const std::vector<Word>& tuple,
                                              std::size_t plateau_budget = 200000);

/// True iff the images of phi form a free basis: the Nielsen reduction of the
/// image tuple is a signed permutation of the generators. Fast-fail: the
/// abelianization matrix must have determinant +-1.
[[nodiscard]] bool is_automorphism(const Endomorphism& phi);

}  // namespace foxprim
