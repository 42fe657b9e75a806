#pragma once

#include <string>
#include <vector>

#include "foxprim/ring.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// An endomorphism of F_n, given by the images of the generators.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const std::vector<Word>& images() const noexcept { return images_; }
  [[nodiscard]] const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_ = 2;
  std::vector<Word> images_;
};

[[nodiscard]] Word apply(const Endomorphism& phi, const Word& w);

/// Linear extension to the group ring.
[[nodiscard]] RingElement apply(const Endomorphism& phi, const RingElement& a);

/// (phi . psi)(x) = phi(psi(x)).
[[nodiscard]] Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

/// Integer matrix of exponent sums: entry (i, j) is the x_j exponent sum of
/// the image of x_i.
[[nodiscard]] IntMatrix abelianization_matrix(const Endomorphism& phi);

/// "x1->a b; x2->B": semicolon-separated images, one per generator, each in
/// word syntax. Every generator 1..rank must be assigned exactly once.
[[nodiscard]] Endomorphism parse_endomorphism(const std::string& text, int rank);
[[nodiscard]] std::string format_endomorphism(const Endomorphism& phi);

}  // namespace foxprim
