#include "foxprim/delta.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>

namespace foxprim {

namespace {

void require_trivial_abelianization(const Word& w, const char* who) {
  for (long long e : exponent_vector(w))
    if (e != 0) throw std::invalid_argument(std::string(who) + " requires trivial abelianization");
}

LaurentElement generator_minus_one(int rank, int i) {
  return LaurentElement::generator(rank, i) - LaurentElement::one(rank);
}

}  // namespace

MetabelianElement project_to_metabelian(const Word& w) {
  int n = w.rank();
  MetabelianElement e;
  e.rank = n;
  e.abelianization = exponent_vector(w);
  e.derivatives.reserve(static_cast<std::size_t>(n));
  for (const RingElement& d : left_derivatives(w)) e.derivatives.push_back(abelianize(d));
  // Magnus identity: sum_i d_i * (x_i - 1) = x^ab - 1
  LaurentElement lhs(n);
  for (int i = 1; i <= n; ++i)
    lhs += e.derivatives[static_cast<std::size_t>(i - 1)] * generator_minus_one(n, i);
  LaurentElement rhs =
      LaurentElement::monomial(n, LaurentElement::Monomial(e.abelianization.begin(),
                                                           e.abelianization.end())) -
      LaurentElement::one(n);
  if (lhs != rhs) throw std::logic_error("Magnus identity violated in metabelian projection");
  return e;
}

DeltaVerdictM2 delta_primitive_m2(const Word& w) {
  if (w.rank() != 2) throw std::invalid_argument("the M_2 decision requires rank 2");
  DeltaVerdictM2 out{DeltaVerdictM2::Kind::NotDeltaPrimitive, 0, {}, LaurentElement::zero(2)};
  MetabelianElement e = project_to_metabelian(w);
  if (e.abelianization[0] != 0 || e.abelianization[1] != 0) {
    out.kind = DeltaVerdictM2::Kind::NotInDerivedSubgroup;
    return out;
  }
  // h in M_2' has derivatives q*(1-x2), q*(x1-1); Delta-primitive iff q is a
  // unit +-monomial.
  LaurentElement one_minus_x2 = LaurentElement::one(2) - LaurentElement::generator(2, 2);
  LaurentElement x1_minus_one = generator_minus_one(2, 1);
  auto q = laurent_divide_exact(e.derivatives[0], one_minus_x2);
  if (!q || !(e.derivatives[1] == *q * x1_minus_one))
    throw std::logic_error("derivatives of a derived-subgroup element must be multiples of the "
                           "commutator derivatives");
  out.quotient = *q;
  if (auto unit = laurent_is_unit(*q)) {
    out.kind = DeltaVerdictM2::Kind::DeltaPrimitive;
    out.sign = unit->first;
    out.conjugator.assign(unit->second.begin(), unit->second.end());
  }
  return out;
}

namespace {

std::size_t pair_index(int a, int b, int n) {
  // (1,2) -> 0, (1,3) -> 1, ..., (n-1,n) -> N-1
  return static_cast<std::size_t>((a - 1) * n - (a - 1) * a / 2 + (b - a - 1));
}

void validate_spec(const CommutatorProductSpec& spec) {
  validate_rank(spec.rank);
  auto n = static_cast<std::size_t>(spec.rank);
  if (spec.exponents.size() != n * (n - 1) / 2)
    throw std::invalid_argument("need n(n-1)/2 exponents, got " +
                                std::to_string(spec.exponents.size()));
}

}  // namespace

IntMatrix weight2_matrix(const CommutatorProductSpec& spec) {
  validate_spec(spec);
  int n = spec.rank;
  IntMatrix m(n, n, Int(0));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Int k = spec.exponents[pair_index(a, b, n)];
      // d_a([x_a,x_b]) = 1 - x_a x_b x_a^-1 = -(x_b - 1) mod Delta^2
      m.at(a - 1, b - 1) = -k;
      m.at(b - 1, a - 1) = k;
    }
  return m;
}

Word weight2_word(const CommutatorProductSpec& spec) {
  validate_spec(spec);
  int n = spec.rank;
  Word out(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      long long k = spec.exponents[pair_index(a, b, n)];
      if (k == 0) continue;
      Word c = commutator(Word(n, {static_cast<Letter>(a)}), Word(n, {static_cast<Letter>(b)}));
      out = multiply(out, power(c, k));
    }
  return out;
}

bool odd_rank_obstruction(const Word& w) {
  if (w.rank() % 2 == 0) throw std::invalid_argument("odd_rank_obstruction requires odd rank");
  require_trivial_abelianization(w, "odd_rank_obstruction");
  IntMatrix a = linearized_matrix(w);
  int n = w.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) != -a.at(j, i))
        throw std::logic_error("theory violation: linearized matrix not antisymmetric");
  if (int_det(a) != 0)
    throw std::logic_error("theory violation: odd-rank linearized matrix with nonzero determinant");
  return true;
}

bool delta_primitive_necessary(const Word& w) {
  require_trivial_abelianization(w, "delta_primitive_necessary");
  Int det = int_det(linearized_matrix(w));
  return det == 1 || det == -1;
}

RingMatrix certificate_matrix(const Word& u) { return double_jacobian(u).transpose(); }

bool verify_inverse_certificate(const Word& u, const RingMatrix& m) {
  require_trivial_abelianization(u, "verify_inverse_certificate");
  int n = u.rank();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("certificate matrix dimension does not match rank");
  RingMatrix t = certificate_matrix(u);
  RingMatrix id = ring_identity_matrix(n, n >= 2 ? n : 2);
  return matrix_mul(t, m) == id && matrix_mul(m, t) == id;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Sparse exact linear system A x = b over the rationals; free variables are
// set to zero. Returns nullopt when inconsistent.
struct SparseSystem {
  int ncols = 0;
  std::vector<std::map<int, Rat>> rows;
  std::vector<Rat> rhs;

  // Gauss-Jordan: each pivot column is eliminated from every other row, so
  // at the end pivot rows carry only their pivot and free columns.
  std::optional<std::vector<Rat>> solve() {
    std::vector<std::pair<int, std::size_t>> pivots;  // (column, row)
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < ncols; ++col) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end() || it->second == 0) continue;
        if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
      }
      if (best == rows.size()) continue;
      used[best] = true;
      pivots.emplace_back(col, best);
      Rat pv = rows[best][col];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end() || it->second == 0) continue;
        Rat f = it->second / pv;
        for (const auto& [c, v] : rows[best]) {
          auto jt = rows[r].find(c);
          if (jt == rows[r].end()) {
            rows[r].emplace(c, -f * v);
          } else {
            jt->second -= f * v;
            if (jt->second == 0) rows[r].erase(jt);
          }
        }
        rhs[r] -= f * rhs[best];
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      if (rows[r].empty() && rhs[r] != 0) return std::nullopt;
      if (!rows[r].empty() && rhs[r] != 0) return std::nullopt;  // would force free variables
    }
    std::vector<Rat> x(static_cast<std::size_t>(ncols), Rat(0));
    for (const auto& [col, row] : pivots)
      x[static_cast<std::size_t>(col)] = rhs[row] / rows[row].at(col);
    return x;
  }
};

}  // namespace

std::optional<RingMatrix> find_inverse_certificate(const Word& u, std::size_t support_len,
                                                   long long coeff_bound) {
  require_trivial_abelianization(u, "find_inverse_certificate");
  int n = u.rank();
  RingMatrix t = certificate_matrix(u);

  std::vector<Word> support;
  WordEnumerator en(n, support_len);
  while (auto w = en.next()) support.push_back(*w);
  std::map<Word, int, ShortlexLess> sidx;
  for (std::size_t k = 0; k < support.size(); ++k) sidx[support[k]] = static_cast<int>(k);
  const int per_entry = static_cast<int>(support.size());

  // Solve t * M = I column by column; M's column j stacks the unknown
  // coefficients of entries (k, j), k = 0..n-1, over the support words.
  RingMatrix result(n, n, RingElement::zero(n));
  for (int j = 0; j < n; ++j) {
    std::map<std::pair<int, Word>, std::size_t> row_of;  // (equation block, product word)
    SparseSystem sys;
    sys.ncols = n * per_entry;
    auto row_index = [&](int i, const Word& p) {
      auto [it, inserted] = row_of.try_emplace({i, p}, sys.rows.size());
      if (inserted) {
        sys.rows.emplace_back();
        sys.rhs.emplace_back(0);
      }
      return it->second;
    };
    for (int i = 0; i < n; ++i) {
      row_index(i, Word(n));  // ensure the identity-coefficient constraint exists
      for (int k = 0; k < n; ++k) {
        for (const auto& [g, c] : t.at(i, k).terms()) {
          for (int s = 0; s < per_entry; ++s) {
            Word p = multiply(g, support[static_cast<std::size_t>(s)]);
            sys.rows[row_index(i, p)][k * per_entry + s] += Rat(c);
          }
        }
      }
    }
    for (auto& [key, r] : row_of) sys.rhs[r] = (key.first == j && key.second.is_identity()) ? 1 : 0;
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    for (int k = 0; k < n; ++k) {
      RingElement entry(n);
      for (int s = 0; s < per_entry; ++s) {
        Rat v = (*sol)[static_cast<std::size_t>(k * per_entry + s)];
        if (v == 0) continue;
        if (denominator(v) != 1) return std::nullopt;
        Int num = numerator(v);
        if (num > coeff_bound || num < -coeff_bound) return std::nullopt;
        entry.add_term(support[static_cast<std::size_t>(s)], num);
      }
      result.at(k, j) = std::move(entry);
    }
  }
  if (!verify_inverse_certificate(u, result)) return std::nullopt;
  return result;
}

RingMatrix standard_commutator_inverse(int m) {
  if (m < 1) throw std::invalid_argument("need at least one commutator pair");
  int n = 2 * m;
  // u = [x1,x2][x3,x4]...; its certificate matrix is block upper triangular
  // with 2x2 diagonal blocks, one per pair.
  CommutatorProductSpec spec{n, std::vector<long long>(static_cast<std::size_t>(n * (n - 1) / 2), 0)};
  for (int p = 0; p < m; ++p) {
    int a = 2 * p + 1;
    spec.exponents[pair_index(a, a + 1, n)] = 1;
  }
  Word u = weight2_word(spec);
  RingMatrix t = certificate_matrix(u);

  // rank-2 solution, relabeled to generators (a, b) inside rank n:
  //   [ a-1       -1 + b - ab ]
  //   [ b          b - b^2    ]
  auto pair_inverse = [&](int a) {
    Word xa(n, {static_cast<Letter>(a)});
    Word xb(n, {static_cast<Letter>(a + 1)});
    RingElement one = RingElement::one(n);
    RingMatrix blk(2, 2, RingElement::zero(n));
    blk.at(0, 0) = RingElement::from_word(xa) - one;
    blk.at(0, 1) = RingElement::from_word(xb) - one - RingElement::from_word(multiply(xa, xb));
    blk.at(1, 0) = RingElement::from_word(xb);
    blk.at(1, 1) = RingElement::from_word(xb) - RingElement::from_word(multiply(xb, xb));
    return blk;
  };

  // block back-substitution for the upper-triangular inverse
  std::vector<RingMatrix> diag_inv;
  for (int p = 0; p < m; ++p) diag_inv.push_back(pair_inverse(2 * p + 1));
  RingMatrix inv(n, n, RingElement::zero(n));
  auto block_of = [&](const RingMatrix& mat, int bp, int bq) {
    RingMatrix b(2, 2, RingElement::zero(n));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) b.at(r, c) = mat.at(2 * bp + r, 2 * bq + c);
    return b;
  };
  auto set_block = [&](RingMatrix& mat, int bp, int bq, const RingMatrix& b) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) mat.at(2 * bp + r, 2 * bq + c) = b.at(r, c);
  };
  for (int p = m - 1; p >= 0; --p) {
    set_block(inv, p, p, diag_inv[static_cast<std::size_t>(p)]);
    for (int q = p - 1; q >= 0; --q) {
      // X[q][p] = -invD_q * sum_{q < r <= p} T[q][r] * X[r][p]
      RingMatrix acc(2, 2, RingElement::zero(n));
      for (int r = q + 1; r <= p; ++r) {
        RingMatrix prod = matrix_mul(block_of(t, q, r), block_of(inv, r, p));
        for (int rr = 0; rr < 2; ++rr)
          for (int cc = 0; cc < 2; ++cc) acc.at(rr, cc) += prod.at(rr, cc);
      }
      RingMatrix corr = matrix_mul(diag_inv[static_cast<std::size_t>(q)], acc);
      for (int rr = 0; rr < 2; ++rr)
        for (int cc = 0; cc < 2; ++cc) corr.at(rr, cc) = -corr.at(rr, cc);
      set_block(inv, q, p, corr);
    }
  }
  if (!verify_inverse_certificate(u, inv))
    throw std::logic_error("constructed standard commutator inverse failed verification");
  return inv;
}

bool classify_delta_primitive_f2(const Word& u) {
  if (u.rank() != 2) throw std::invalid_argument("the F_2 classification requires rank 2");
  Word core = cyclic_reduce(u).core;
  if (core.length() != 4) return false;
  Word canon = canonical_rotation(core);
  Word c12 = commutator(Word(2, {1}), Word(2, {2}));
  Word c21 = commutator(Word(2, {2}), Word(2, {1}));
  return canon == canonical_rotation(c12) || canon == canonical_rotation(c21);
}

}  // namespace foxprim
