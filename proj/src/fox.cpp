#include "foxprim/fox.hpp"

#include <stdexcept>

namespace foxprim {

namespace {

void check_index(int i, int rank) {
  if (i < 1 || i > rank)
    throw std::invalid_argument("derivative index " + std::to_string(i) + " outside rank " +
                                std::to_string(rank));
}

}  // namespace

std::vector<RingElement> left_derivatives(const Word& w) {
  int n = w.rank();
  std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::zero(n));
  std::vector<Letter> prefix;
  prefix.reserve(w.length());
  for (Letter l : w.letters()) {
    auto g = static_cast<std::size_t>(generator_of(l) - 1);
    if (l > 0) {
      d[g].add_term(Word(n, prefix), 1);
      prefix.push_back(l);
    } else {
      prefix.push_back(l);
      d[g].add_term(Word(n, prefix), -1);
    }
  }
  return d;
}

std::vector<RingElement> right_derivatives(const Word& w) {
  int n = w.rank();
  std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::zero(n));
  const auto& ls = w.letters();
  std::vector<Letter> suffix;  // built back to front
  suffix.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    Letter l = *it;
    auto g = static_cast<std::size_t>(generator_of(l) - 1);
    std::vector<Letter> word(suffix.rbegin(), suffix.rend());
    if (l > 0) {
      d[g].add_term(Word(n, word), 1);
      suffix.push_back(l);
    } else {
      suffix.push_back(l);
      word.assign(suffix.rbegin(), suffix.rend());
      d[g].add_term(Word(n, word), -1);
    }
  }
  return d;
}

RingElement left_derivative(const Word& w, int i) {
  check_index(i, w.rank());
  return left_derivatives(w)[static_cast<std::size_t>(i - 1)];
}

RingElement right_derivative(const Word& w, int i) {
  check_index(i, w.rank());
  return right_derivatives(w)[static_cast<std::size_t>(i - 1)];
}

RingElement left_derivative(const RingElement& a, int i) {
  check_index(i, a.rank());
  RingElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out += c * left_derivative(w, i);
  return out;
}

RingElement right_derivative(const RingElement& a, int i) {
  check_index(i, a.rank());
  RingElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out += c * right_derivative(w, i);
  return out;
}

RingMatrix jacobian(const Endomorphism& phi) {
  int n = phi.rank();
  RingMatrix m(n, n, RingElement::zero(n));
  for (int i = 1; i <= n; ++i) {
    auto row = left_derivatives(phi.image(i));
    for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = std::move(row[static_cast<std::size_t>(j - 1)]);
  }
  return m;
}

RingMatrix double_jacobian(const Word& u) {
  int n = u.rank();
  RingMatrix m(n, n, RingElement::zero(n));
  auto d = left_derivatives(u);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(i - 1, j - 1) = right_derivative(d[static_cast<std::size_t>(i - 1)], j);
  return m;
}

bool chain_rule_check(const Endomorphism& phi, const RingElement& u) {
  int n = u.rank();
  RingElement v = apply(phi, u);
  RingMatrix j_phi = jacobian(phi);
  for (int j = 1; j <= n; ++j) {
    RingElement lhs = left_derivative(v, j);
    RingElement rhs(n);
    for (int k = 1; k <= n; ++k)
      rhs += apply(phi, left_derivative(u, k)) * j_phi.at(k - 1, j - 1);
    if (lhs != rhs) return false;
  }
  return true;
}

bool chain_rule_check(const Endomorphism& phi, const Word& u) {
  return chain_rule_check(phi, RingElement::from_word(u));
}

bool derivative_row_identity_check(const Endomorphism& phi, const Word& g) {
  int n = g.rank();
  Word h = apply(phi, g);
  auto dh = left_derivatives(h);
  auto dg = left_derivatives(g);
  RingMatrix j_phi = jacobian(phi);
  for (int j = 1; j <= n; ++j) {
    RingElement rhs(n);
    for (int k = 1; k <= n; ++k)
      rhs += apply(phi, dg[static_cast<std::size_t>(k - 1)]) * j_phi.at(k - 1, j - 1);
    if (dh[static_cast<std::size_t>(j - 1)] != rhs) return false;
  }
  return true;
}

IntMatrix linearized_matrix(const Word& u) {
  int n = u.rank();
  for (int i = 1; i <= n; ++i)
    if (exponent_sum(u, i) != 0)
      throw std::invalid_argument("linearized matrix needs all exponent sums zero (x" +
                                  std::to_string(i) + " sums to " +
                                  std::to_string(exponent_sum(u, i)) + ")");
  // aug(d_j'(v)) equals the x_j exponent sum of v, so the row for d_i(u)
  // is the coefficient-weighted sum of exponent vectors of its terms.
  IntMatrix m(n, n, Int(0));
  auto d = left_derivatives(u);
  for (int i = 0; i < n; ++i) {
    for (const auto& [w, c] : d[static_cast<std::size_t>(i)].terms()) {
      auto ev = exponent_vector(w);
      for (int j = 0; j < n; ++j) m.at(i, j) += c * ev[static_cast<std::size_t>(j)];
    }
  }
  return m;
}

}  // namespace foxprim
