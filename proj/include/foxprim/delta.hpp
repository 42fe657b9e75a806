#pragma once

#include <optional>
#include <vector>

#include "foxprim/fox.hpp"
#include "foxprim/ring.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// Magnus embedding data of an element of the free metabelian group M_n:
/// the exponent-sum vector together with the abelianized left Fox
/// derivatives. Two words are equal in M_n iff these agree.
struct MetabelianElement {
  int rank = 2;
  std::vector<long long> abelianization;
  std::vector<LaurentElement> derivatives;

  friend bool operator==(const MetabelianElement&, const MetabelianElement&) = default;
};

/// Projects a word into M_n. The defining identity
///   sum_i derivatives[i] * (x_i - 1) = monomial(abelianization) - 1
/// is checked on construction.
[[nodiscard]] MetabelianElement project_to_metabelian(const Word& w);

struct DeltaVerdictM2 {
  enum class Kind { NotInDerivedSubgroup, NotDeltaPrimitive, DeltaPrimitive };
  Kind kind;
  int sign = 0;                        // DeltaPrimitive: +-1
  std::vector<long long> conjugator;   // DeltaPrimitive: exponent vector of g
  LaurentElement quotient;             // the ZA_2 element q with derivatives
                                       // q*(1-x2), q*(x1-1)
};

/// Exact decision for M_2: an element of M_2' equals [x1,x2]^(+-g) iff the
/// quotient of its abelianized derivatives by those of [x1,x2] is a unit
/// +-monomial. Both derivative quotients are computed and must agree.
[[nodiscard]] DeltaVerdictM2 delta_primitive_m2(const Word& w);

/// Exponents for the product c_1^{k_1} ... c_N^{k_N} of the weight-2 basic
/// commutators c = [x_a, x_b], pairs (a, b) in lexicographic order,
/// N = n(n-1)/2.
struct CommutatorProductSpec {
  int rank = 2;
  std::vector<long long> exponents;
};

/// The matrix of (x_j - 1)-coefficients of the derivatives of the product,
/// modulo the square of the augmentation ideal: antisymmetric with zero
/// diagonal, entry (a, b) = -k_{(a,b)} for a < b.
[[nodiscard]] IntMatrix weight2_matrix(const CommutatorProductSpec& spec);

/// The product word itself.
[[nodiscard]] Word weight2_word(const CommutatorProductSpec& spec);

/// For odd rank, every element with trivial abelianization fails the
/// mod-Delta^2 necessary condition: its linearized matrix is antisymmetric
/// with zero diagonal, hence has determinant 0. Returns true after checking
/// exactly that; a nonzero determinant would falsify the theory and throws
/// std::logic_error.
[[nodiscard]] bool odd_rank_obstruction(const Word& w);

/// Necessary condition for Delta-primitivity: the linearized matrix is
/// unimodular (determinant +-1). Requires trivial abelianization.
[[nodiscard]] bool delta_primitive_necessary(const Word& w);

/// The invertibility certificate target: the transpose of double_jacobian(u),
/// entry (i, j) = d_i'(d_j(u)). In this orientation the rows of derivatives
/// factor exactly through the free right-module basis (x_i - 1), so
/// invertibility is equivalent to the derivatives generating the
/// augmentation ideal as a right ideal; the untransposed matrix is genuinely
/// not invertible for u = [x1,x2] (it has a singular image under a 2x2
/// integer matrix representation of F_2).
[[nodiscard]] RingMatrix certificate_matrix(const Word& u);

/// True iff m is a two-sided inverse of certificate_matrix(u) over ZF_n: a
/// sufficient certificate that u is Delta-primitive. Requires trivial
/// abelianization of u.
[[nodiscard]] bool verify_inverse_certificate(const Word& u, const RingMatrix& m);

/// Best-effort bounded search for an inverse of certificate_matrix(u):
/// solves the Z-linear system over entries supported on words of length <=
/// support_len with |coefficient| <= coeff_bound. The result, if any, is
/// verified exactly before being returned.
[[nodiscard]] std::optional<RingMatrix> find_inverse_certificate(const Word& u,
                                                                 std::size_t support_len = 4,
                                                                 long long coeff_bound = 3);

/// Explicit verified inverse of certificate_matrix([x1,x2][x3,x4]...[x_{2m-1},x_{2m}])
/// in rank 2m, built by block back-substitution from the rank-2 solution.
[[nodiscard]] RingMatrix standard_commutator_inverse(int m);

/// Complete rank-2 classification: u is Delta-primitive in F_2 iff its
/// cyclic core is a rotation of [x1,x2] or [x2,x1].
[[nodiscard]] bool classify_delta_primitive_f2(const Word& u);

}  // namespace foxprim
