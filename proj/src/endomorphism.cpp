#include "foxprim/endomorphism.hpp"

#include <stdexcept>

namespace foxprim {

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  validate_rank(rank);
  if (images_.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("endomorphism needs exactly " + std::to_string(rank) + " images");
  for (const Word& w : images_)
    if (w.rank() != rank) throw std::invalid_argument("image word has mismatched rank");
}

Endomorphism Endomorphism::identity(int rank) {
  validate_rank(rank);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word(rank, {static_cast<Letter>(i)}));
  return {rank, std::move(images)};
}

Word apply(const Endomorphism& phi, const Word& w) {
  if (phi.rank() != w.rank()) throw std::invalid_argument("rank mismatch applying endomorphism");
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = phi.image(generator_of(l));
    if (l > 0) {
      for (Letter m : img.letters()) append_reduced(out, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        append_reduced(out, inverse_of(*it));
    }
  }
  return Word(w.rank(), out);
}

RingElement apply(const Endomorphism& phi, const RingElement& a) {
  if (phi.rank() != a.rank()) throw std::invalid_argument("rank mismatch applying endomorphism");
  RingElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(apply(phi, w), c);
  return out;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("rank mismatch composing endomorphisms");
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const Word& w : psi.images()) images.push_back(apply(phi, w));
  return {phi.rank(), std::move(images)};
}

IntMatrix abelianization_matrix(const Endomorphism& phi) {
  int n = phi.rank();
  IntMatrix m(n, n, Int(0));
  for (int i = 1; i <= n; ++i) {
    auto ev = exponent_vector(phi.image(i));
    for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = ev[static_cast<std::size_t>(j - 1)];
  }
  return m;
}

Endomorphism parse_endomorphism(const std::string& text, int rank) {
  validate_rank(rank);
  std::vector<Word> images(static_cast<std::size_t>(rank), Word(rank));
  std::vector<bool> assigned(static_cast<std::size_t>(rank), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";,", start);
    std::string entry = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t arrow = entry.find("->");
    if (arrow == std::string::npos) {
      if (entry.find_first_not_of(" \t") != std::string::npos)
        throw std::invalid_argument("map entry missing '->': \"" + entry + "\"");
    } else {
      std::string lhs = entry.substr(0, arrow);
      std::string rhs = entry.substr(arrow + 2);
      std::size_t xp = lhs.find('x');
      if (xp == std::string::npos) throw std::invalid_argument("map entry must start with x<i>: \"" + entry + "\"");
      int idx = 0;
      for (std::size_t k = xp + 1; k < lhs.size(); ++k) {
        char c = lhs[k];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < '0' || c > '9') throw std::invalid_argument("bad generator in map entry: \"" + entry + "\"");
        idx = idx * 10 + (c - '0');
      }
      if (idx < 1 || idx > rank)
        throw std::invalid_argument("map assigns x" + std::to_string(idx) + " outside rank " +
                                    std::to_string(rank));
      if (assigned[static_cast<std::size_t>(idx - 1)])
        throw std::invalid_argument("map assigns x" + std::to_string(idx) + " twice");
      assigned[static_cast<std::size_t>(idx - 1)] = true;
      images[static_cast<std::size_t>(idx - 1)] = parse_word(rhs, rank);
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  for (int i = 0; i < rank; ++i)
    if (!assigned[static_cast<std::size_t>(i)])
      throw std::invalid_argument("map does not assign x" + std::to_string(i + 1));
  return {rank, std::move(images)};
}

std::string format_endomorphism(const Endomorphism& phi) {
  std::string out;
  for (int i = 1; i <= phi.rank(); ++i) {
    if (i > 1) out += "; ";
    out += 'x' + std::to_string(i) + "->" + format_word(phi.image(i));
  }
  return out;
}

}  // namespace foxprim
