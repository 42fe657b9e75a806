#include "foxprim/random.hpp"

namespace foxprim {

Word random_reduced_word(Rng& rng, int rank, std::size_t length) {
  std::uniform_int_distribution<int> first(0, 2 * rank - 1);
  std::uniform_int_distribution<int> rest(0, 2 * rank - 2);
  std::vector<Letter> ls;
  ls.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (ls.empty()) {
      ls.push_back(letter_from_key(first(rng)));
    } else {
      // choose among the 2n-1 letters that do not cancel
      int skip = letter_key(inverse_of(ls.back()));
      int key = rest(rng);
      if (key >= skip) ++key;
      ls.push_back(letter_from_key(key));
    }
  }
  return Word(rank, ls);
}

Word random_derived_word(Rng& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::size_t> short_len(1, 3);
  for (;;) {
    Word w(rank);
    int factors = count(rng);
    for (int f = 0; f < factors; ++f) {
      Word u = random_reduced_word(rng, rank, short_len(rng));
      Word v = random_reduced_word(rng, rank, short_len(rng));
      Word g = random_reduced_word(rng, rank, short_len(rng) - 1);
      w = multiply(w, conjugate(g, commutator(u, v)));
    }
    if (!w.is_identity() && w.length() <= max_len) return w;
  }
}

Endomorphism random_endomorphism(Rng& rng, int rank, std::size_t max_image_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_image_len);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) images.push_back(random_reduced_word(rng, rank, len(rng)));
  return {rank, std::move(images)};
}

Endomorphism random_elementary_automorphism(Rng& rng, int rank) {
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> gen_dist(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  int i = gen_dist(rng);
  int j = gen_dist(rng);
  while (j == i) j = gen_dist(rng);
  std::vector<Word> images;
  for (int g = 1; g <= rank; ++g) images.push_back(Word(rank, {static_cast<Letter>(g)}));
  auto& wi = images[static_cast<std::size_t>(i - 1)];
  switch (kind_dist(rng)) {
    case 0:
      std::swap(wi, images[static_cast<std::size_t>(j - 1)]);
      break;
    case 1:
      wi = invert(wi);
      break;
    case 2: {
      Letter l = coin(rng) ? static_cast<Letter>(j) : -static_cast<Letter>(j);
      wi = multiply(wi, Word(rank, {l}));
      break;
    }
    default: {
      Letter l = coin(rng) ? static_cast<Letter>(j) : -static_cast<Letter>(j);
      wi = multiply(Word(rank, {l}), wi);
      break;
    }
  }
  return {rank, std::move(images)};
}

Endomorphism random_nielsen_automorphism(Rng& rng, int rank, int steps,
                                         std::size_t max_total_len) {
  Endomorphism phi = Endomorphism::identity(rank);
  for (int s = 0; s < steps; ++s) {
    Endomorphism next = compose(random_elementary_automorphism(rng, rank), phi);
    std::size_t total = 0;
    for (const Word& w : next.images()) total += w.length();
    if (total > max_total_len) continue;
    phi = std::move(next);
  }
  return phi;
}

}  // namespace foxprim
