#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "foxprim/endomorphism.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

/// Default node budget for orbit searches.
inline constexpr std::uint64_t kDefaultOrbitBudget = 1'000'000;

/// Whitehead automorphism of the first kind: a signed permutation of the
/// generators. images[g-1] is the letter x_g is sent to.
struct TypeIMove {
  std::vector<Letter> images;
  friend bool operator==(const TypeIMove&, const TypeIMove&) = default;
};

/// Per-generator action of a type II move with multiplier a.
enum class GenAction : std::uint8_t {
  Fix,       // x -> x
  RightMul,  // x -> x a
  LeftMul,   // x -> a^-1 x
  Conjugate, // x -> a^-1 x a
};

/// Whitehead automorphism of the second kind: the multiplier's own generator
/// is fixed; every other generator gets one of the four actions.
struct TypeIIMove {
  Letter multiplier = 1;
  std::vector<GenAction> actions;  // indexed by generator - 1
  friend bool operator==(const TypeIIMove&, const TypeIIMove&) = default;
};

using WhiteheadMove = std::variant<TypeIMove, TypeIIMove>;

[[nodiscard]] Word apply_whitehead(const WhiteheadMove& m, const Word& w);
[[nodiscard]] WhiteheadMove inverse_whitehead(const WhiteheadMove& m);
[[nodiscard]] Endomorphism whitehead_to_endomorphism(const WhiteheadMove& m, int rank);

/// All nonidentity signed permutations (cached per rank).
const std::vector<WhiteheadMove>& type_one_moves(int rank);

/// All type II moves except the identity and the purely inner one
/// (cached per rank; 2n * (4^(n-1) - 2) moves).
const std::vector<WhiteheadMove>& type_two_moves(int rank);

/// Cyclic reduction followed by the least rotation: the canonical
/// representative of the conjugacy class of w.
[[nodiscard]] Word cyclic_canonical(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// A replayable path in the automorphism group: applying `moves` in order to
/// `source` and then conjugating by `conjugator` yields exactly `target`.
struct OrbitCertificate {
  Word source;
  Word target;
  std::vector<WhiteheadMove> moves;
  Word conjugator;
};

/// Derives the conjugator and validates the replay; throws std::logic_error
/// if the chain does not carry source into the conjugacy class of target.
[[nodiscard]] OrbitCertificate make_orbit_certificate(const Word& source,
                                                      std::vector<WhiteheadMove> moves,
                                                      const Word& target);

[[nodiscard]] bool replay_certificate(const OrbitCertificate& cert);

struct MinimizeResult {
  Word minimal;  // canonical cyclic word of least length in the orbit
  OrbitCertificate certificate;
};

/// Repeatedly applies a length-reducing type II move to the cyclic word
/// until none exists. By the peak reduction theorem the result has minimal
/// length in the automorphism orbit of w (as a cyclic word).
[[nodiscard]] MinimizeResult whitehead_minimize(const Word& w);

enum class OrbitVerdict { Same, Different, BudgetExceeded };

struct SameOrbitResult {
  OrbitVerdict verdict;
  std::optional<OrbitCertificate> certificate;  // set when verdict == Same
  Word minimal_u;
  Word minimal_v;
  std::uint64_t nodes = 0;
};

/// Decides whether v is an automorphic image of u by minimizing both and
/// searching the minimal level through length-preserving Whitehead moves.
[[nodiscard]] SameOrbitResult same_orbit(const Word& u, const Word& v,
                                         std::uint64_t budget = kDefaultOrbitBudget);

struct SupportResult {
  int support = 0;   // least number of distinct generators seen
  bool exact = false;  // minimal level exhausted within budget
  std::uint64_t nodes = 0;
};

/// Upper bound on the outer rank: the least number of distinct generators
/// over the Whitehead-minimal level of the orbit of w. Exact when the level
/// was exhausted. The minimal level is explored modulo signed generator
/// permutations, which do not change the support count.
[[nodiscard]] SupportResult min_generator_support(const Word& w,
                                                  std::uint64_t budget = kDefaultOrbitBudget);

struct WitnessResult {
  std::optional<Word> witness;  // v in the orbit of u with phi(v) outside it
  std::uint64_t nodes = 0;
  bool exhausted = false;  // every orbit element within the bound was tested
};

/// Searches the orbit of u (cyclic words of length <= max_len) for an
/// element whose image under phi leaves the orbit. An empty result means no
/// witness within the bound, never a proof that none exists.
[[nodiscard]] WitnessResult orbit_violation_witness(const Endomorphism& phi, const Word& u,
                                                    std::size_t max_len,
                                                    std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace foxprim
