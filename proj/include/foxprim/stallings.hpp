#pragma once

#include <vector>

#include "foxprim/endomorphism.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// Rank of the subgroup generated by the given words, computed by folding
/// the wedge of generator loops to an immersion (Stallings folding). The
/// rank of the folded graph is edges - vertices + 1.
[[nodiscard]] int subgroup_rank(const std::vector<Word>& generators);

/// True iff the images of phi generate a subgroup of rank = rank(F): for an
/// n-generated subgroup that forces the images to be a free basis of the
/// image, i.e. phi is injective.
[[nodiscard]] bool is_monomorphism(const Endomorphism& phi);

}  // namespace foxprim
