#include "foxprim/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace foxprim {

namespace {

void check_same_rank(int a, int b) {
  if (a != b)
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

RingElement::RingElement(int rank) : rank_(rank) { validate_rank(rank); }

RingElement RingElement::one(int rank) { return from_word(Word(rank)); }

RingElement RingElement::from_word(const Word& w) { return from_term(w, 1); }

RingElement RingElement::from_term(const Word& w, Int coeff) {
  RingElement e(w.rank());
  e.add_term(w, coeff);
  return e;
}

Int RingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void RingElement::add_term(const Word& w, const Int& coeff) {
  if (coeff == 0) return;
  check_same_rank(rank_, w.rank());
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  check_same_rank(rank_, rhs.rank_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  check_same_rank(rank_, rhs.rank_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

RingElement operator+(RingElement a, const RingElement& b) {
  a += b;
  return a;
}

RingElement operator-(RingElement a, const RingElement& b) {
  a -= b;
  return a;
}

RingElement operator-(const RingElement& a) {
  RingElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(w, -c);
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  check_same_rank(a.rank(), b.rank());
  RingElement out(a.rank());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(multiply(wa, wb), ca * cb);
  return out;
}

RingElement operator*(const Int& c, const RingElement& a) {
  RingElement out(a.rank());
  for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
  return out;
}

RingElement word_times(const Word& w, const RingElement& a) {
  RingElement out(a.rank());
  for (const auto& [t, c] : a.terms()) out.add_term(multiply(w, t), c);
  return out;
}

RingElement times_word(const RingElement& a, const Word& w) {
  RingElement out(a.rank());
  for (const auto& [t, c] : a.terms()) out.add_term(multiply(t, w), c);
  return out;
}

Int augmentation(const RingElement& a) {
  Int s = 0;
  for (const auto& [w, c] : a.terms()) s += c;
  return s;
}

LaurentElement::LaurentElement(int rank) : rank_(rank) { validate_rank(rank); }

LaurentElement LaurentElement::one(int rank) {
  return monomial(rank, Monomial(static_cast<std::size_t>(rank), 0));
}

LaurentElement LaurentElement::monomial(int rank, Monomial exponents, Int coeff) {
  validate_rank(rank);
  if (exponents.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("exponent vector length does not match rank");
  LaurentElement e(rank);
  e.add_term(exponents, coeff);
  return e;
}

LaurentElement LaurentElement::generator(int rank, int i) {
  Monomial m(static_cast<std::size_t>(rank), 0);
  m.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(rank, std::move(m));
}

Int LaurentElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentElement::add_term(const Monomial& m, const Int& coeff) {
  if (coeff == 0) return;
  if (m.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("exponent vector length does not match rank");
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
  check_same_rank(rank_, rhs.rank_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& rhs) {
  check_same_rank(rank_, rhs.rank_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
  a += b;
  return a;
}

LaurentElement operator-(LaurentElement a, const LaurentElement& b) {
  a -= b;
  return a;
}

LaurentElement operator-(const LaurentElement& a) {
  LaurentElement out(a.rank());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  check_same_rank(a.rank(), b.rank());
  LaurentElement out(a.rank());
  LaurentElement::Monomial sum(static_cast<std::size_t>(a.rank()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ma[i] + mb[i];
      out.add_term(sum, ca * cb);
    }
  return out;
}

LaurentElement operator*(const Int& c, const LaurentElement& a) {
  LaurentElement out(a.rank());
  for (const auto& [m, cm] : a.terms()) out.add_term(m, c * cm);
  return out;
}

LaurentElement abelianize_word(const Word& w) {
  auto ev = exponent_vector(w);
  return LaurentElement::monomial(w.rank(), LaurentElement::Monomial(ev.begin(), ev.end()));
}

LaurentElement abelianize(const RingElement& a) {
  LaurentElement out(a.rank());
  for (const auto& [w, c] : a.terms()) {
    auto ev = exponent_vector(w);
    out.add_term(LaurentElement::Monomial(ev.begin(), ev.end()), c);
  }
  return out;
}

std::optional<std::pair<int, LaurentElement::Monomial>> laurent_is_unit(const LaurentElement& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return std::make_pair(c == 1 ? 1 : -1, m);
}

namespace {

using Monomial = LaurentElement::Monomial;

// componentwise minimum over all exponent vectors appearing in p (p nonzero)
Monomial min_exponents(const LaurentElement& p) {
  Monomial m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentElement shift(const LaurentElement& p, const Monomial& by) {
  LaurentElement out(p.rank());
  Monomial m(by.size());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i] + by[i];
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

std::optional<LaurentElement> laurent_divide_exact(const LaurentElement& p,
                                                   const LaurentElement& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero Laurent element");
  check_same_rank(p.rank(), q.rank());
  if (p.is_zero()) return LaurentElement::zero(p.rank());

  // Shift both into ordinary polynomials with zero minimal exponents; a
  // Laurent quotient exists iff the ordinary polynomial quotient does.
  Monomial mp = min_exponents(p);
  Monomial mq = min_exponents(q);
  Monomial neg(mp.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -mp[i];
  LaurentElement ph = shift(p, neg);
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -mq[i];
  LaurentElement qh = shift(q, neg);

  // Greedy leading-term division w.r.t. the lex order on exponent vectors.
  const auto& qlead = *qh.terms().rbegin();
  LaurentElement quot(p.rank());
  LaurentElement rem = ph;
  Monomial t(mp.size());
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = rlead.first[i] - qlead.first[i];
      if (t[i] < 0) return std::nullopt;
    }
    if (rlead.second % qlead.second != 0) return std::nullopt;
    Int c = rlead.second / qlead.second;
    LaurentElement term = LaurentElement::monomial(p.rank(), t, c);
    quot += term;
    rem -= term * qh;
  }
  Monomial back(mp.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = mp[i] - mq[i];
  return shift(quot, back);
}

RingMatrix ring_identity_matrix(int dim, int rank) {
  RingMatrix m(dim, dim, RingElement::zero(rank));
  for (int i = 0; i < dim; ++i) m.at(i, i) = RingElement::one(rank);
  return m;
}

namespace {

template <class E>
Matrix<E> generic_mul(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  if (a.rows() == 0 || b.cols() == 0) return {};
  Matrix<E> out(a.rows(), b.cols(), a.at(0, 0) - a.at(0, 0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      E s = a.at(i, 0) * b.at(0, j);
      for (int k = 1; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

}  // namespace

RingMatrix matrix_mul(const RingMatrix& a, const RingMatrix& b) { return generic_mul(a, b); }
LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) { return generic_mul(a, b); }

LaurentMatrix abelianize(const RingMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols(), LaurentElement{});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = abelianize(m.at(i, j));
  return out;
}

namespace {

LaurentElement laurent_det_rec(const LaurentMatrix& m, std::vector<int>& cols, int row) {
  int rank = m.at(0, 0).rank();
  if (cols.size() == 1) return m.at(row, cols[0]);
  LaurentElement det(rank);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const LaurentElement& pivot = m.at(row, cols[k]);
    if (pivot.is_zero()) continue;
    int col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    LaurentElement minor = laurent_det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    LaurentElement contrib = pivot * minor;
    if (k % 2 == 0)
      det += contrib;
    else
      det -= contrib;
  }
  return det;
}

}  // namespace

LaurentElement laurent_det(const LaurentMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty matrix");
  std::vector<int> cols(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) cols[static_cast<std::size_t>(c)] = c;
  return laurent_det_rec(m, cols, 0);
}

Int int_det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct RingToken {
  enum Kind { Plus, Minus, Number, WordText } kind;
  Int number;
  std::string text;
  std::size_t pos;
};

// Splits into sign/coefficient/word-text tokens. Word text is any run of
// letters, 'x<digits>', '^<int>', '*' and spaces that belongs to one term.
std::vector<RingToken> tokenize_ring(const std::string& text) {
  std::vector<RingToken> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+') {
      out.push_back({RingToken::Plus, 0, "", i});
      ++i;
    } else if (c == '-') {
      out.push_back({RingToken::Minus, 0, "", i});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      Int v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      out.push_back({RingToken::Number, v, "", start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      std::string chunk;
      while (i < n) {
        char d = text[i];
        if (std::isalpha(static_cast<unsigned char>(d)) ||
            std::isdigit(static_cast<unsigned char>(d)) || d == '*' ||
            std::isspace(static_cast<unsigned char>(d))) {
          chunk.push_back(d);
          ++i;
        } else if (d == '^') {
          chunk.push_back(d);
          ++i;
          if (i < n && (text[i] == '-' || text[i] == '+')) {
            chunk.push_back(text[i]);
            ++i;
          }
        } else {
          break;
        }
      }
      out.push_back({RingToken::WordText, 0, chunk, start});
    } else if (c == '*') {
      ++i;  // separator between coefficient and word
    } else {
      throw std::invalid_argument("ring element syntax error at position " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace

RingElement parse_ring_element(const std::string& text, int rank) {
  validate_rank(rank);
  RingElement out(rank);
  auto tokens = tokenize_ring(text);
  std::size_t i = 0;
  bool any = false;
  while (i < tokens.size()) {
    Int sign = 1;
    while (i < tokens.size() &&
           (tokens[i].kind == RingToken::Plus || tokens[i].kind == RingToken::Minus)) {
      if (tokens[i].kind == RingToken::Minus) sign = -sign;
      ++i;
    }
    if (i >= tokens.size()) {
      if (any) throw std::invalid_argument("ring element ends with a dangling sign");
      break;
    }
    Int coeff = 1;
    bool have_coeff = false;
    if (tokens[i].kind == RingToken::Number) {
      coeff = tokens[i].number;
      have_coeff = true;
      ++i;
    }
    if (i < tokens.size() && tokens[i].kind == RingToken::WordText) {
      Word w = parse_word(tokens[i].text, rank);
      out.add_term(w, sign * coeff);
      ++i;
    } else if (have_coeff) {
      out.add_term(Word(rank), sign * coeff);
    } else {
      throw std::invalid_argument("expected a term at position " +
                                  std::to_string(tokens[i].pos));
    }
    any = true;
  }
  return out;
}

std::string format_ring_element(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit_coeff = mag == 1;
    if (!unit_coeff || w.is_identity()) out += mag.str();
    if (!w.is_identity()) {
      if (!unit_coeff) out += "*";
      std::string wt = format_word(w);
      if (w.rank() <= 26) {
        // spaced compact letters, e.g. "a b A"
        std::string spaced;
        for (std::size_t k = 0; k < wt.size(); ++k) {
          if (k) spaced += ' ';
          spaced += wt[k];
        }
        out += spaced;
      } else {
        out += wt;
      }
    }
  }
  return out;
}

std::string format_laurent(const LaurentElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (m[i] != 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += mono;
    }
  }
  return out;
}

}  // namespace foxprim
