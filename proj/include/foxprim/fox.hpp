#pragma once

#include "foxprim/endomorphism.hpp"
#include "foxprim/ring.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

// Fox derivatives. The left derivatives d_i are the unique coefficients with
//   a - aug(a) = sum_i d_i(a) (x_i - 1),
// the right derivatives d_i' the unique coefficients with
//   a - aug(a) = sum_i (x_i - 1) d_i'(a).
// On words they satisfy d_i(uv) = d_i(u) + u d_i(v) and
// d_i'(uv) = d_i'(u) v + d_i'(v); both vanish on constants. Word derivatives
// are computed by a single scan over prefix (resp. suffix) products; the
// product rule is kept as a test oracle.

[[nodiscard]] RingElement left_derivative(const Word& w, int i);
[[nodiscard]] RingElement left_derivative(const RingElement& a, int i);
[[nodiscard]] RingElement right_derivative(const Word& w, int i);
[[nodiscard]] RingElement right_derivative(const RingElement& a, int i);

/// All n left (resp. right) derivatives in one scan.
[[nodiscard]] std::vector<RingElement> left_derivatives(const Word& w);
[[nodiscard]] std::vector<RingElement> right_derivatives(const Word& w);

/// Jacobian of an endomorphism: entry (i, j) = d_j(phi(x_i)).
[[nodiscard]] RingMatrix jacobian(const Endomorphism& phi);

/// Double Jacobian of a word: entry (i, j) = d_j'(d_i(u)).
[[nodiscard]] RingMatrix double_jacobian(const Word& u);

/// Checks d_j(phi(u)) = sum_k phi(d_k(u)) d_j(phi(x_k)) for every j
/// (the chain rule), by computing both sides independently.
[[nodiscard]] bool chain_rule_check(const Endomorphism& phi, const RingElement& u);
[[nodiscard]] bool chain_rule_check(const Endomorphism& phi, const Word& u);

/// Checks the row identity (d_1(h),...,d_n(h)) =
/// (phi(d_1(g)),...,phi(d_n(g))) * J_phi with h = phi(g).
[[nodiscard]] bool derivative_row_identity_check(const Endomorphism& phi, const Word& g);

/// The matrix of (x_j - 1)-coefficients of the d_i(u) modulo the square of
/// the augmentation ideal: entry (i, j) = aug(d_j'(d_i(u))). Computed from
/// exponent sums of the left-derivative terms; agreement with the entrywise
/// augmentation of double_jacobian(u) is a tested invariant. Requires all
/// exponent sums of u to vanish.
[[nodiscard]] IntMatrix linearized_matrix(const Word& u);

}  // namespace foxprim
