#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>

#include "foxprim/primitivity.hpp"
#include "foxprim/random.hpp"

using namespace foxprim;

TEST_CASE("primitivity decisions") {
  CHECK(is_primitive(parse_word("a", 2)));
  CHECK(is_primitive(parse_word("aba", 2)));
  CHECK_FALSE(is_primitive(parse_word("aabbb", 2)));
  CHECK_FALSE(is_primitive(parse_word("abAB", 2)));
  CHECK_FALSE(is_primitive(Word(2)));
  CHECK(is_primitive(parse_word("abc", 3)));
}

TEST_CASE("primitivity is invariant under automorphisms") {
  Rng rng(79);
  for (int t = 0; t < 25; ++t) {
    Word w = random_reduced_word(rng, 2, 1 + static_cast<std::size_t>(t) % 6);
    Endomorphism alpha = random_nielsen_automorphism(rng, 2, 6, 20);
    CHECK(is_primitive(w) == is_primitive(apply(alpha, w)));
  }
}

TEST_CASE("syllable-exponent necessary condition") {
  CHECK(cmz_necessary_condition(parse_word("aab", 2)));
  CHECK_FALSE(cmz_necessary_condition(parse_word("abAB", 2)));
  CHECK_FALSE(cmz_necessary_condition(parse_word("aabb", 2)));
  CHECK(cmz_necessary_condition(parse_word("a", 2)));
  CHECK_FALSE(cmz_necessary_condition(Word(2)));
  CHECK_FALSE(cmz_necessary_condition(parse_word("aa", 2)));
  // cyclic merge of boundary syllables: baab has cyclic runs b^2, a^2
  CHECK_FALSE(cmz_necessary_condition(parse_word("baab", 2)));
  CHECK_THROWS_AS((void)cmz_necessary_condition(parse_word("abc", 3)), std::invalid_argument);
}

TEST_CASE("primitivity implies the necessary conditions, exhaustively to length 10") {
  WordEnumerator en(2, 10);
  std::size_t primitives = 0;
  while (auto w = en.next()) {
    if (!is_primitive(*w)) continue;
    ++primitives;
    long long g = 0;
    for (long long e : exponent_vector(*w)) g = std::gcd(g, e < 0 ? -e : e);
    CHECK(g == 1);
    CHECK(cmz_necessary_condition(cyclic_reduce(*w).core));
  }
  CHECK(primitives > 100);
}

TEST_CASE("enumerating rank-2 primitives") {
  PrimitiveEnumeratorF2 en(2);
  std::vector<Word> words;
  while (auto w = en.next()) words.push_back(*w);
  REQUIRE(words.size() == 12);  // 4 of length 1, 8 of length 2
  std::size_t len1 = 0, len2 = 0;
  for (const auto& w : words) {
    if (w.length() == 1) ++len1;
    if (w.length() == 2) ++len2;
    CHECK(w.is_cyclically_reduced());
    CHECK(cmz_necessary_condition(w));
  }
  CHECK(len1 == 4);
  CHECK(len1 + len2 == 12);
  // both orderings and inverses of x1 x2 appear
  CHECK(std::find(words.begin(), words.end(), parse_word("ab", 2)) != words.end());
  CHECK(std::find(words.begin(), words.end(), parse_word("ba", 2)) != words.end());
  CHECK(std::find(words.begin(), words.end(), parse_word("AB", 2)) != words.end());
}

TEST_CASE("blocking verdicts") {
  // certified families
  auto v = blocking_verdict(parse_word("abAB", 2), 10);
  CHECK(v.kind == BlockingVerdict::Kind::BlockedProven);
  CHECK(v.rule == "commutator");
  v = blocking_verdict(parse_word("baBA", 2), 10);
  CHECK(v.kind == BlockingVerdict::Kind::BlockedProven);
  v = blocking_verdict(parse_word("aabb", 2), 10);
  CHECK(v.kind == BlockingVerdict::Kind::BlockedProven);
  CHECK(v.rule == "power-pair");
  v = blocking_verdict(parse_word("AAbbb", 2), 10);
  CHECK(v.kind == BlockingVerdict::Kind::BlockedProven);

  // extendable prefixes validate their witnesses on construction
  v = blocking_verdict(parse_word("a", 2), 6);
  REQUIRE(v.kind == BlockingVerdict::Kind::Extendable);
  CHECK(*v.witness == parse_word("a", 2));

  v = blocking_verdict(parse_word("aab", 2), 8);
  REQUIRE(v.kind == BlockingVerdict::Kind::Extendable);
  CHECK(is_prefix_no_cancellation(parse_word("aab", 2), *v.witness));
  CHECK(is_primitive(*v.witness));
  CHECK(v.witness->is_cyclically_reduced());

  // in rank 3 a commutator of generators extends: [x1,x2] x3 is primitive
  v = blocking_verdict(parse_word("abAB", 3), 6);
  REQUIRE(v.kind == BlockingVerdict::Kind::Extendable);
}

TEST_CASE("primitive counts match the coprime-vector classification") {
  // classes of primitives correspond to coprime abelianization vectors, one
  // cyclic word of length |p|+|q| each: 4 L phi(L) words at length L >= 2
  std::vector<std::size_t> per_len(9, 0);
  PrimitiveEnumeratorF2 en(8);
  while (auto w = en.next()) ++per_len[w->length()];
  std::size_t expected[] = {0, 4, 8, 24, 32, 80, 48, 168, 128};
  for (std::size_t len = 1; len <= 8; ++len) CHECK(per_len[len] == expected[len]);
}

TEST_CASE("no short primitive extends the certified blocking families") {
  Word comm = parse_word("abAB", 2);
  Word pow = parse_word("aabb", 2);
  PrimitiveEnumeratorF2 en(10);
  while (auto w = en.next()) {
    CHECK_FALSE(is_prefix_no_cancellation(comm, *w));
    CHECK_FALSE(is_prefix_no_cancellation(pow, *w));
  }
}

TEST_CASE("relabeling canonical form") {
  // the canonical form is a relabeling image and least among all of them
  Rng rng(83);
  for (int t = 0; t < 40; ++t) {
    Word w = random_reduced_word(rng, 3, 5);
    Word c = hyperoctahedral_canonical(w);
    CHECK(c.length() == w.length());
    CHECK(hyperoctahedral_canonical(c) == c);
    CHECK((shortlex_less(c, w) || c == w));
  }
}

TEST_CASE("blocking search in rank 3") {
  BlockingReport report = blocking_search(3, 2, 6);
  CHECK(report.entries.size() > 0);
  // every candidate of length <= 2 extends to a primitive
  for (const BlockingEntry& e : report.entries) {
    CHECK(e.verdict.kind == BlockingVerdict::Kind::Extendable);
  }
  CHECK(report.survivors.empty());
  CHECK_THROWS_AS((void)blocking_search(2, 2, 6), std::invalid_argument);

  // workers do not change the outcome
  BlockingReport parallel = blocking_search(3, 2, 6, 3);
  REQUIRE(parallel.entries.size() == report.entries.size());
  for (std::size_t k = 0; k < report.entries.size(); ++k) {
    CHECK(parallel.entries[k].candidate == report.entries[k].candidate);
    CHECK(parallel.entries[k].verdict.kind == report.entries[k].verdict.kind);
  }
}

TEST_CASE("checkpoints round-trip and reject corruption") {
  std::string path = "test_checkpoint.bin";
  BlockingReport full = blocking_search(3, 2, 5, 1, path);
  Checkpoint cp = load_checkpoint(path);
  CHECK(cp.rank == 3);
  CHECK(cp.entries.size() == full.entries.size());

  // resuming from the finished checkpoint recomputes nothing and agrees
  BlockingReport resumed = blocking_search(3, 2, 5, 1, "", path);
  CHECK(resumed.resumed_entries == full.entries.size());
  REQUIRE(resumed.entries.size() == full.entries.size());
  for (std::size_t k = 0; k < full.entries.size(); ++k) {
    CHECK(resumed.entries[k].candidate == full.entries[k].candidate);
    CHECK(resumed.entries[k].verdict.kind == full.entries[k].verdict.kind);
  }

  // mismatched parameters are rejected
  CHECK_THROWS_AS((void)blocking_search(4, 2, 5, 1, "", path), std::runtime_error);
  CHECK_THROWS_AS((void)blocking_search(3, 2, 9, 1, "", path), std::runtime_error);

  // truncation and bit flips are rejected
  {
    std::ifstream in(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::ofstream t1("test_checkpoint_trunc.bin", std::ios::binary);
    t1.write(data.data(), static_cast<std::streamsize>(data.size() / 2));
    t1.close();
    CHECK_THROWS_AS((void)load_checkpoint("test_checkpoint_trunc.bin"), std::runtime_error);
    data[data.size() / 3] = static_cast<char>(data[data.size() / 3] ^ 0x40);
    std::ofstream t2("test_checkpoint_flip.bin", std::ios::binary);
    t2.write(data.data(), static_cast<std::streamsize>(data.size()));
    t2.close();
    CHECK_THROWS_AS((void)load_checkpoint("test_checkpoint_flip.bin"), std::runtime_error);
  }

  // a body cut mid-record with the hash recomputed over the shortened bytes
  // must still be rejected
  {
    std::ifstream in(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string body = data.substr(0, data.size() - 8);
    body.resize(body.size() - 5);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : body) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    for (int k = 0; k < 8; ++k) body.push_back(static_cast<char>((h >> (8 * k)) & 0xff));
    std::ofstream t3("test_checkpoint_cut.bin", std::ios::binary);
    t3.write(body.data(), static_cast<std::streamsize>(body.size()));
    t3.close();
    CHECK_THROWS_AS((void)load_checkpoint("test_checkpoint_cut.bin"), std::runtime_error);
  }
}

TEST_CASE("resume from a half-finished search reproduces the full result") {
  BlockingReport full = blocking_search(3, 3, 6);
  std::string path = "test_checkpoint_half.bin";
  Checkpoint half;
  half.rank = 3;
  half.cand_len = 3;
  half.max_len = 6;
  for (std::size_t k = 0; k < full.entries.size() / 2; ++k) half.entries.push_back(full.entries[k]);
  save_checkpoint(half, path);

  BlockingReport resumed = blocking_search(3, 3, 6, 2, "", path);
  CHECK(resumed.resumed_entries == full.entries.size() / 2);
  REQUIRE(resumed.entries.size() == full.entries.size());
  for (std::size_t k = 0; k < full.entries.size(); ++k) {
    CHECK(resumed.entries[k].candidate == full.entries[k].candidate);
    CHECK(resumed.entries[k].verdict.kind == full.entries[k].verdict.kind);
    CHECK(resumed.entries[k].verdict.witness == full.entries[k].verdict.witness);
  }
  CHECK(resumed.survivors == full.survivors);
}
