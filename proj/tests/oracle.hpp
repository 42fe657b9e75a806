#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// derivatives by recursive product rule, and the defining-identity checks.

#include "foxprim/fox.hpp"
#include "foxprim/ring.hpp"
#include "foxprim/word.hpp"

namespace foxprim::oracle {

// d_i by the product rule, splitting the word in half recursively:
// d_i(uv) = d_i(u) + u d_i(v), d_i(x_i) = 1, d_i(x_i^-1) = -x_i^-1.
inline RingElement naive_left_derivative(const Word& w, int i) {
  int n = w.rank();
  if (w.length() == 0) return RingElement::zero(n);
  if (w.length() == 1) {
    Letter l = w.letters()[0];
    if (generator_of(l) != i) return RingElement::zero(n);
    if (l > 0) return RingElement::one(n);
    return RingElement::from_term(w, -1);
  }
  std::size_t half = w.length() / 2;
  Word u(n, std::span<const Letter>(w.letters().data(), half));
  Word v(n, std::span<const Letter>(w.letters().data() + half, w.length() - half));
  return naive_left_derivative(u, i) + word_times(u, naive_left_derivative(v, i));
}

// d_i'(uv) = d_i'(u) v + d_i'(v), d_i'(x_i) = 1, d_i'(x_i^-1) = -x_i^-1.
inline RingElement naive_right_derivative(const Word& w, int i) {
  int n = w.rank();
  if (w.length() == 0) return RingElement::zero(n);
  if (w.length() == 1) {
    Letter l = w.letters()[0];
    if (generator_of(l) != i) return RingElement::zero(n);
    if (l > 0) return RingElement::one(n);
    return RingElement::from_term(w, -1);
  }
  std::size_t half = w.length() / 2;
  Word u(n, std::span<const Letter>(w.letters().data(), half));
  Word v(n, std::span<const Letter>(w.letters().data() + half, w.length() - half));
  return times_word(naive_right_derivative(u, i), v) + naive_right_derivative(v, i);
}

// w - aug(w) = sum_i d_i(w) (x_i - 1)
inline bool left_identity_holds(const Word& w) {
  int n = w.rank();
  RingElement lhs = RingElement::from_word(w) - RingElement::one(n);
  RingElement sum(n);
  for (int i = 1; i <= n; ++i) {
    RingElement xi =
        RingElement::from_word(Word(n, {static_cast<Letter>(i)})) - RingElement::one(n);
    sum += left_derivative(w, i) * xi;
  }
  return lhs == sum;
}

// w - aug(w) = sum_i (x_i - 1) d_i'(w)
inline bool right_identity_holds(const Word& w) {
  int n = w.rank();
  RingElement lhs = RingElement::from_word(w) - RingElement::one(n);
  RingElement sum(n);
  for (int i = 1; i <= n; ++i) {
    RingElement xi =
        RingElement::from_word(Word(n, {static_cast<Letter>(i)})) - RingElement::one(n);
    sum += xi * right_derivative(w, i);
  }
  return lhs == sum;
}

}  // namespace foxprim::oracle
