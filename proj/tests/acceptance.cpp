// Acceptance suite: one pass/fail line per criterion, each with its time
// budget enforced. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "foxprim/delta.hpp"
#include "foxprim/fox.hpp"
#include "foxprim/nielsen.hpp"
#include "foxprim/primitivity.hpp"
#include "foxprim/random.hpp"
#include "foxprim/stallings.hpp"
#include "foxprim/whitehead.hpp"
#include "oracle.hpp"

using namespace foxprim;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, double limit_seconds,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    ok = false;
    note += " [over time budget]";
  }
  std::printf("%s criterion %2d (%6.2fs / %gs): %s%s\n", ok ? "PASS" : "FAIL", number, secs,
              limit_seconds, what.c_str(), note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Word c12() { return parse_word("abAB", 2); }

bool fox_identities() {
  Rng rng(1001);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  for (int rank : {2, 4}) {
    for (int t = 0; t < 600; ++t) {
      Word w = random_reduced_word(rng, rank, len(rng));
      if (!oracle::left_identity_holds(w) || !oracle::right_identity_holds(w)) return false;
    }
  }
  return true;
}

bool chain_rules() {
  Rng rng(1002);
  std::uniform_int_distribution<std::size_t> len(1, 10);
  for (int rank : {2, 3}) {
    for (int t = 0; t < 300; ++t) {
      Endomorphism phi = random_endomorphism(rng, rank, 5);
      Word u = random_reduced_word(rng, rank, len(rng));
      if (!chain_rule_check(phi, u)) return false;
      if (!derivative_row_identity_check(phi, u)) return false;
    }
  }
  return true;
}

bool golden_example() {
  Endomorphism alpha = parse_endomorphism("x1->aC; x2->cbC; x3->c; x4->d", 4);
  Word u = parse_word("abABcdCD", 4);
  Word v = parse_word("abAcBdCD", 4);
  if (apply(alpha, u) != v) return false;
  if (!is_automorphism(alpha)) return false;
  SameOrbitResult r = same_orbit(u, v, 1000000);
  return r.verdict == OrbitVerdict::Same && r.certificate && replay_certificate(*r.certificate) &&
         r.nodes <= 1000000;
}

bool double_jacobian_fixture() {
  RingMatrix d = double_jacobian(c12());
  auto r = [](const std::string& t) { return parse_ring_element(t, 2); };
  if (d.at(0, 0) != r("A - b A") || d.at(0, 1) != r("- A") ||
      d.at(1, 0) != r("1 - b A B + A B") || d.at(1, 1) != r("B - A B"))
    return false;
  return laurent_det(abelianize(d)) == LaurentElement::monomial(2, {-1, -1});
}

bool odd_rank_suite() {
  Rng rng(1005);
  std::uniform_int_distribution<long long> k(-4, 4);
  std::uniform_int_distribution<std::size_t> len(4, 16);
  for (int n : {3, 5}) {
    for (int t = 0; t < 100; ++t) {
      CommutatorProductSpec spec{n, std::vector<long long>(static_cast<std::size_t>(n * (n - 1) / 2))};
      for (auto& e : spec.exponents) e = k(rng);
      Word w = weight2_word(spec);
      IntMatrix a = linearized_matrix(w);
      for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0) return false;
        for (int j = 0; j < n; ++j)
          if (a.at(i, j) != -a.at(j, i)) return false;
      }
      if (int_det(a) != 0) return false;
      if (a != weight2_matrix(spec)) return false;
    }
    for (int t = 0; t < 100; ++t) {
      Word w = random_derived_word(rng, n, 16);
      IntMatrix a = linearized_matrix(w);
      for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0) return false;
        for (int j = 0; j < n; ++j)
          if (a.at(i, j) != -a.at(j, i)) return false;
      }
      if (int_det(a) != 0) return false;
    }
  }
  for (int m = 1; m <= 3; ++m) {
    int n = 2 * m;
    CommutatorProductSpec spec{n, std::vector<long long>(static_cast<std::size_t>(n * (n - 1) / 2), 0)};
    Word u(n);
    for (int p = 0; p < m; ++p) {
      Word xa(n, {static_cast<Letter>(2 * p + 1)});
      Word xb(n, {static_cast<Letter>(2 * p + 2)});
      u = multiply(u, commutator(xa, xb));
    }
    IntMatrix a = linearized_matrix(u);
    if (int_det(a) != 1) return false;
  }
  return true;
}

bool m2_decision() {
  Rng rng(1006);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  Word c = c12();
  for (int t = 0; t < 100; ++t) {
    Word g = random_reduced_word(rng, 2, len(rng));
    bool inverse = t % 2 == 1;
    Word h = conjugate(g, inverse ? invert(c) : c);
    DeltaVerdictM2 v = delta_primitive_m2(h);
    if (v.kind != DeltaVerdictM2::Kind::DeltaPrimitive) return false;
    if (v.sign != (inverse ? -1 : 1)) return false;
    if (v.conjugator != exponent_vector(g)) return false;
    // re-verification through the embedding: rebuild from the verdict
    Word rep = multiply(power(parse_word("a", 2), v.conjugator[0]),
                        power(parse_word("b", 2), v.conjugator[1]));
    Word rebuilt = conjugate(rep, v.sign > 0 ? c : invert(c));
    if (!(project_to_metabelian(rebuilt) == project_to_metabelian(h))) return false;
  }
  for (int k = 2; k <= 5; ++k)
    if (delta_primitive_m2(power(c, k)).kind != DeltaVerdictM2::Kind::NotDeltaPrimitive)
      return false;
  for (int t = 0; t < 100; ++t) {
    Word g1 = random_reduced_word(rng, 2, len(rng));
    Word g2 = random_reduced_word(rng, 2, len(rng));
    Word w = multiply(conjugate(g1, c), conjugate(g2, t % 2 ? c : invert(c)));
    DeltaVerdictM2 v = delta_primitive_m2(w);
    if (v.kind == DeltaVerdictM2::Kind::DeltaPrimitive) return false;
    if (laurent_is_unit(v.quotient)) return false;  // non-unit quotient by construction
  }
  return true;
}

bool f2_classification() {
  std::set<std::vector<Letter>> accepted;
  WordEnumerator en(2, 10);
  while (auto w = en.next()) {
    if (!w->is_cyclically_reduced()) continue;
    if (classify_delta_primitive_f2(*w)) {
      accepted.insert(w->letters());
      if (!delta_primitive_necessary(*w)) return false;
      if (delta_primitive_m2(*w).kind != DeltaVerdictM2::Kind::DeltaPrimitive) return false;
    }
  }
  // exactly the rotations of the commutator and of its inverse
  std::set<std::vector<Letter>> expected;
  for (Word base : {c12(), invert(c12())}) {
    const auto& ls = base.letters();
    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<Letter> rot;
      for (std::size_t k = 0; k < 4; ++k) rot.push_back(ls[(r + k) % 4]);
      expected.insert(rot);
    }
  }
  return accepted == expected;
}

bool primitives_to_14() {
  PrimitiveEnumeratorF2 en(14);
  std::vector<std::size_t> per_len(15, 0);
  std::size_t total = 0;
  Word comm = c12();
  Word pow = parse_word("aabb", 2);
  while (auto w = en.next()) {
    ++total;
    ++per_len[w->length()];
    if (!cmz_necessary_condition(*w)) return false;
    if (is_prefix_no_cancellation(comm, *w)) return false;
    if (is_prefix_no_cancellation(pow, *w)) return false;
  }
  if (per_len[1] != 4 || per_len[1] + per_len[2] != 12) return false;
  // independent count oracle: rank-2 primitive conjugacy classes correspond
  // one-to-one to coprime abelianization vectors, and the class with vector
  // (p, q) consists of the |p|+|q| rotations of one cyclically reduced word;
  // hence exactly 4 L phi(L) primitives of each length L >= 2
  auto phi = [](std::size_t n) {
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) n /= p;
        result -= result / p;
      }
    }
    if (n > 1) result -= result / n;
    return result;
  };
  for (std::size_t len = 2; len <= 14; ++len)
    if (per_len[len] != 4 * len * phi(len)) return false;
  return total > 1000;
}

bool orbit_witness_harness() {
  Word x1 = parse_word("a", 2);
  std::vector<std::string> bad = {
      "x1->aa; x2->b",      "x1->a; x2->bb",    "x1->abAB; x2->abAB", "x1->abAB; x2->b",
      "x1->a; x2->a",       "x1->ab; x2->ab",   "x1->aaa; x2->b",     "x1->aba; x2->b",
      "x1->ab; x2->ba",     "x1->aabb; x2->b",  "x1->A; x2->A",
  };
  for (const std::string& text : bad) {
    Endomorphism phi = parse_endomorphism(text, 2);
    if (is_automorphism(phi)) return false;  // fixture sanity
    WitnessResult r = orbit_violation_witness(phi, x1, 8);
    if (!r.witness) return false;
    if (!is_primitive(*r.witness)) return false;
    if (is_primitive(apply(phi, *r.witness))) return false;
  }
  Rng rng(1009);
  std::vector<Endomorphism> good = {Endomorphism::identity(2),
                                    parse_endomorphism("x1->b; x2->a", 2),
                                    parse_endomorphism("x1->aB; x2->b", 2)};
  while (good.size() < 10) good.push_back(random_nielsen_automorphism(rng, 2, 6, 18));
  for (const Endomorphism& alpha : good) {
    if (!is_automorphism(alpha)) return false;  // fixture sanity
    WitnessResult r = orbit_violation_witness(alpha, x1, 8);
    if (r.witness) return false;
    if (!r.exhausted) return false;
  }
  return true;
}

bool recognition_cross_checks() {
  Rng rng(1010);
  for (int t = 0; t < 200; ++t) {
    Endomorphism phi = random_nielsen_automorphism(rng, 2 + t % 2, 7, 40);
    if (!is_automorphism(phi)) return false;
    if (!is_monomorphism(phi)) return false;
    if (!laurent_is_unit(laurent_det(abelianize(jacobian(phi))))) return false;
  }
  Endomorphism sq = parse_endomorphism("x1->aa; x2->b", 2);
  if (!is_monomorphism(sq)) return false;
  if (is_automorphism(sq)) return false;
  if (apply(sq, c12()) == c12()) return false;  // it moves the basic commutator
  return true;
}

bool blocking_smoke() {
  BlockingReport a = blocking_search(3, 4, 10);
  BlockingReport b = blocking_search(3, 4, 10);
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (a.entries[k].candidate != b.entries[k].candidate) return false;
    if (a.entries[k].verdict.kind != b.entries[k].verdict.kind) return false;
    if (a.entries[k].verdict.nodes != b.entries[k].verdict.nodes) return false;
    if (a.entries[k].verdict.witness != b.entries[k].verdict.witness) return false;
  }
  for (const BlockingEntry& e : a.entries)
    if (e.candidate.length() <= 2 && e.verdict.kind != BlockingVerdict::Kind::Extendable)
      return false;
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite (library version %s)\n", "0.1.0");

  criterion(1, "left/right derivative identities on random words, ranks 2 and 4", 30,
            fox_identities);
  criterion(2, "chain rule and Jacobian row identity on random pairs, ranks 2 and 3", 60,
            chain_rules);
  criterion(3, "golden rank-4 automorphism carries one product to the other", 60, golden_example);
  criterion(4, "frozen double Jacobian table and its unit abelianized determinant", 1,
            double_jacobian_fixture);
  criterion(5, "odd ranks obstructed, standard even products unimodular", 120, odd_rank_suite);
  criterion(6, "rank-2 metabelian decision with embedding re-verification", 60, m2_decision);
  criterion(7, "rank-2 classification exhaustive to length 10", 300, f2_classification);
  criterion(8, "rank-2 primitives to length 14: counts, syllables, no blocked prefixes", 600,
            primitives_to_14);
  criterion(9, "witness harness separates automorphisms from other endomorphisms", 300,
            orbit_witness_harness);
  criterion(10, "recognition agreement across reduction, folding, and determinants", 120,
            recognition_cross_checks);
  criterion(11, "rank-3 survivor search is reproducible and short candidates extend", 600,
            blocking_smoke);

  if (failures == 0)
    std::printf("all 11 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
