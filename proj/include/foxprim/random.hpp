#pragma once

#include <random>

#include "foxprim/endomorphism.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

using Rng = std::mt19937_64;

/// Uniform freely reduced word of exactly the given length.
[[nodiscard]] Word random_reduced_word(Rng& rng, int rank, std::size_t length);

/// A word with trivial abelianization: a reduced product of conjugated
/// commutators, resampled until its length is in [1, max_len].
[[nodiscard]] Word random_derived_word(Rng& rng, int rank, std::size_t max_len);

/// Endomorphism with images of length <= max_image_len (not necessarily
/// injective or surjective).
[[nodiscard]] Endomorphism random_endomorphism(Rng& rng, int rank, std::size_t max_image_len);

/// One elementary Nielsen automorphism: a transposition, an inversion, or
/// x_i -> x_i x_j^+- / x_j^+- x_i.
[[nodiscard]] Endomorphism random_elementary_automorphism(Rng& rng, int rank);

/// Composition of `steps` elementary Nielsen automorphisms, skipping steps
/// that would push the total image length beyond max_total_len.
[[nodiscard]] Endomorphism random_nielsen_automorphism(Rng& rng, int rank, int steps,
                                                       std::size_t max_total_len = 60);

}  // namespace foxprim
