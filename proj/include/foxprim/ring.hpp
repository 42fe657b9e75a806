#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foxprim/word.hpp"

namespace foxprim {

/// Coefficients are arbitrary-precision integers: Fox derivative coefficients
/// grow with word length and overflow must never occur.
using Int = boost::multiprecision::cpp_int;

/// An element of the integral group ring ZF_n: a finite integer linear
/// combination of reduced words. No zero coefficients are stored.
class RingElement {
 public:
  using TermMap = std::map<Word, Int, ShortlexLess>;

  RingElement() = default;
  explicit RingElement(int rank);

  static RingElement zero(int rank) { return RingElement(rank); }
  static RingElement one(int rank);
  static RingElement from_word(const Word& w);
  static RingElement from_term(const Word& w, Int coeff);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] Int coefficient(const Word& w) const;

  void add_term(const Word& w, const Int& coeff);

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  int rank_ = 2;
  TermMap terms_;
};

[[nodiscard]] RingElement operator+(RingElement a, const RingElement& b);
[[nodiscard]] RingElement operator-(RingElement a, const RingElement& b);
[[nodiscard]] RingElement operator-(const RingElement& a);
[[nodiscard]] RingElement operator*(const RingElement& a, const RingElement& b);
[[nodiscard]] RingElement operator*(const Int& c, const RingElement& a);

/// Left multiplication by a single word (no term-map blowup).
[[nodiscard]] RingElement word_times(const Word& w, const RingElement& a);
[[nodiscard]] RingElement times_word(const RingElement& a, const Word& w);

/// Sum of coefficients; the ring homomorphism ZF -> Z.
[[nodiscard]] Int augmentation(const RingElement& a);

/// An element of the Laurent polynomial ring Z[x1^+-, ..., xn^+-], keyed by
/// exponent vectors.
class LaurentElement {
 public:
  using Monomial = std::vector<long long>;
  using TermMap = std::map<Monomial, Int>;

  LaurentElement() = default;
  explicit LaurentElement(int rank);

  static LaurentElement zero(int rank) { return LaurentElement(rank); }
  static LaurentElement one(int rank);
  static LaurentElement monomial(int rank, Monomial exponents, Int coeff = 1);
  /// The image of the generator x_i.
  static LaurentElement generator(int rank, int i);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Int coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Int& coeff);

  LaurentElement& operator+=(const LaurentElement& rhs);
  LaurentElement& operator-=(const LaurentElement& rhs);

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  int rank_ = 2;
  TermMap terms_;
};

[[nodiscard]] LaurentElement operator+(LaurentElement a, const LaurentElement& b);
[[nodiscard]] LaurentElement operator-(LaurentElement a, const LaurentElement& b);
[[nodiscard]] LaurentElement operator-(const LaurentElement& a);
[[nodiscard]] LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
[[nodiscard]] LaurentElement operator*(const Int& c, const LaurentElement& a);

/// The ring homomorphism ZF_n -> Z[A_n] sending a word to the monomial of its
/// exponent-sum vector.
[[nodiscard]] LaurentElement abelianize(const RingElement& a);
[[nodiscard]] LaurentElement abelianize_word(const Word& w);

/// If p is a single term with coefficient +-1, returns (sign, exponents).
[[nodiscard]] std::optional<std::pair<int, LaurentElement::Monomial>> laurent_is_unit(
    const LaurentElement& p);

/// Exact division in the Laurent ring: returns w with p = w * q when such w
/// exists, nullopt otherwise. Throws on q = 0.
[[nodiscard]] std::optional<LaurentElement> laurent_divide_exact(const LaurentElement& p,
                                                                 const LaurentElement& q);

/// Dense matrix over an arbitrary ring-like element type.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, E fill) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  E& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const E& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_, a_.empty() ? E{} : a_.front());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<E> a_;
};

using RingMatrix = Matrix<RingElement>;
using LaurentMatrix = Matrix<LaurentElement>;
using IntMatrix = Matrix<Int>;

[[nodiscard]] RingMatrix ring_identity_matrix(int dim, int rank);
[[nodiscard]] RingMatrix matrix_mul(const RingMatrix& a, const RingMatrix& b);
[[nodiscard]] LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b);
[[nodiscard]] LaurentMatrix abelianize(const RingMatrix& m);

/// Exact determinant over the commutative Laurent ring (Laplace expansion;
/// intended for the small matrices this tool works with).
[[nodiscard]] LaurentElement laurent_det(const LaurentMatrix& m);

/// Exact integer determinant (fraction-free Bareiss elimination).
[[nodiscard]] Int int_det(const IntMatrix& m);

/// Signed sum of coeff*word terms, e.g. "1 - a b A" or "3*x1 - 2*x2".
[[nodiscard]] RingElement parse_ring_element(const std::string& text, int rank);
[[nodiscard]] std::string format_ring_element(const RingElement& a);
[[nodiscard]] std::string format_laurent(const LaurentElement& p);

}  // namespace foxprim
