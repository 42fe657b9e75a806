#include "foxprim/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace foxprim {

namespace {

void expand_letter_image(std::vector<Letter>& out, const WhiteheadMove& m, Letter l) {
  if (const auto* t1 = std::get_if<TypeIMove>(&m)) {
    Letter img = t1->images[static_cast<std::size_t>(generator_of(l) - 1)];
    append_reduced(out, l > 0 ? img : inverse_of(img));
    return;
  }
  const auto& t2 = std::get<TypeIIMove>(m);
  Letter a = t2.multiplier;
  int g = generator_of(l);
  GenAction action =
      g == generator_of(a) ? GenAction::Fix : t2.actions[static_cast<std::size_t>(g - 1)];
  Letter x = l > 0 ? l : inverse_of(l);
  // image of the positive generator, then invert on the fly if needed
  Letter seq[3];
  int len = 0;
  switch (action) {
    case GenAction::Fix:
      seq[len++] = x;
      break;
    case GenAction::RightMul:
      seq[len++] = x;
      seq[len++] = a;
      break;
    case GenAction::LeftMul:
      seq[len++] = inverse_of(a);
      seq[len++] = x;
      break;
    case GenAction::Conjugate:
      seq[len++] = inverse_of(a);
      seq[len++] = x;
      seq[len++] = a;
      break;
  }
  if (l > 0) {
    for (int k = 0; k < len; ++k) append_reduced(out, seq[k]);
  } else {
    for (int k = len - 1; k >= 0; --k) append_reduced(out, inverse_of(seq[k]));
  }
}

}  // namespace

Word apply_whitehead(const WhiteheadMove& m, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length() * 3);
  for (Letter l : w.letters()) expand_letter_image(out, m, l);
  return Word(w.rank(), out);
}

WhiteheadMove inverse_whitehead(const WhiteheadMove& m) {
  if (const auto* t1 = std::get_if<TypeIMove>(&m)) {
    TypeIMove inv;
    inv.images.resize(t1->images.size());
    for (std::size_t g = 0; g < t1->images.size(); ++g) {
      Letter img = t1->images[g];
      auto h = static_cast<std::size_t>(generator_of(img) - 1);
      inv.images[h] = img > 0 ? static_cast<Letter>(g + 1) : -static_cast<Letter>(g + 1);
    }
    return inv;
  }
  TypeIIMove inv = std::get<TypeIIMove>(m);
  inv.multiplier = inverse_of(inv.multiplier);
  return inv;
}

Endomorphism whitehead_to_endomorphism(const WhiteheadMove& m, int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) {
    std::vector<Letter> out;
    expand_letter_image(out, m, static_cast<Letter>(g));
    images.emplace_back(rank, out);
  }
  return {rank, std::move(images)};
}

namespace {

std::vector<WhiteheadMove> build_type_one(int rank) {
  std::vector<WhiteheadMove> out;
  auto n = static_cast<std::size_t>(rank);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      TypeIMove m;
      m.images.resize(n);
      bool identity = true;
      for (std::size_t g = 0; g < n; ++g) {
        Letter img = static_cast<Letter>(perm[g]);
        if (signs & (1u << g)) img = -img;
        m.images[g] = img;
        if (img != static_cast<Letter>(g + 1)) identity = false;
      }
      if (!identity) out.emplace_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<WhiteheadMove> build_type_two(int rank) {
  std::vector<WhiteheadMove> out;
  auto n = static_cast<std::size_t>(rank);
  std::size_t combos = 1;
  for (std::size_t k = 1; k < n; ++k) combos *= 4;
  for (int key = 0; key < 2 * rank; ++key) {
    Letter a = letter_from_key(key);
    int ag = generator_of(a);
    for (std::size_t code = 0; code < combos; ++code) {
      TypeIIMove m;
      m.multiplier = a;
      m.actions.assign(n, GenAction::Fix);
      std::size_t rem = code;
      bool all_fix = true;
      bool all_conj = true;
      for (int g = 1; g <= rank; ++g) {
        if (g == ag) continue;
        auto action = static_cast<GenAction>(rem % 4);
        rem /= 4;
        m.actions[static_cast<std::size_t>(g - 1)] = action;
        all_fix &= action == GenAction::Fix;
        all_conj &= action == GenAction::Conjugate;
      }
      // the identity and the purely inner move act trivially on cyclic words
      if (all_fix || all_conj) continue;
      out.emplace_back(std::move(m));
    }
  }
  return out;
}

const std::vector<WhiteheadMove>& cached_moves(int rank, bool type_two) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<WhiteheadMove>> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({rank, type_two});
  if (inserted) it->second = type_two ? build_type_two(rank) : build_type_one(rank);
  return it->second;
}

}  // namespace

const std::vector<WhiteheadMove>& type_one_moves(int rank) {
  validate_rank(rank);
  return cached_moves(rank, false);
}

const std::vector<WhiteheadMove>& type_two_moves(int rank) {
  validate_rank(rank);
  return cached_moves(rank, true);
}

Word cyclic_canonical(const Word& w) { return canonical_rotation(cyclic_reduce(w).core); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(w.rank()));
  for (Letter l : w.letters()) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l)) + 0x8000u);
  return static_cast<std::size_t>(h);
}

OrbitCertificate make_orbit_certificate(const Word& source, std::vector<WhiteheadMove> moves,
                                        const Word& target) {
  Word z = source;
  for (const WhiteheadMove& m : moves) z = apply_whitehead(m, z);
  CyclicReduction rz = cyclic_reduce(z);
  CyclicReduction rt = cyclic_reduce(target);
  if (rz.core.length() != rt.core.length())
    throw std::logic_error("certificate chain does not reach the target conjugacy class");
  // find the rotation of rz.core equal to rt.core
  const auto& ls = rz.core.letters();
  std::size_t n = ls.size();
  std::optional<std::size_t> rot;
  if (n == 0) {
    rot = 0;
  } else {
    for (std::size_t r = 0; r < n && !rot; ++r) {
      bool match = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (ls[(r + k) % n] != rt.core.letters()[k]) {
          match = false;
          break;
        }
      }
      if (match) rot = r;
    }
  }
  if (!rot) throw std::logic_error("certificate chain does not reach the target conjugacy class");
  Word prefix(source.rank(), std::span<const Letter>(ls.data(), *rot));
  // target = c_t * rot(core) * c_t^-1 and rot(core) = p^-1 * core * p,
  // z = c_z * core * c_z^-1, so target = (c_t p^-1 c_z^-1) z (...)^-1.
  Word conj = multiply(multiply(rt.conjugator, invert(prefix)), invert(rz.conjugator));
  OrbitCertificate cert{source, target, std::move(moves), std::move(conj)};
  if (!replay_certificate(cert)) throw std::logic_error("certificate replay failed");
  return cert;
}

bool replay_certificate(const OrbitCertificate& cert) {
  Word z = cert.source;
  for (const WhiteheadMove& m : cert.moves) z = apply_whitehead(m, z);
  return conjugate(cert.conjugator, z) == cert.target;
}

MinimizeResult whitehead_minimize(const Word& w) {
  const auto& moves = type_two_moves(w.rank());
  std::vector<WhiteheadMove> chain;
  Word current = w;
  Word core = cyclic_reduce(current).core;
  for (;;) {
    bool reduced = false;
    for (const WhiteheadMove& m : moves) {
      Word image_core = cyclic_reduce(apply_whitehead(m, core)).core;
      if (image_core.length() < core.length()) {
        chain.push_back(m);
        current = apply_whitehead(m, current);
        core = std::move(image_core);
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  Word minimal = canonical_rotation(core);
  OrbitCertificate cert = make_orbit_certificate(w, std::move(chain), minimal);
  return {std::move(minimal), std::move(cert)};
}

namespace {

std::vector<WhiteheadMove> invert_chain(const std::vector<WhiteheadMove>& moves) {
  std::vector<WhiteheadMove> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(inverse_whitehead(*it));
  return out;
}

std::vector<WhiteheadMove> concat_chains(std::vector<WhiteheadMove> a,
                                         const std::vector<WhiteheadMove>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

SameOrbitResult same_orbit(const Word& u, const Word& v, std::uint64_t budget) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in orbit comparison");
  MinimizeResult mu = whitehead_minimize(u);
  MinimizeResult mv = whitehead_minimize(v);
  SameOrbitResult result{OrbitVerdict::Different, std::nullopt, mu.minimal, mv.minimal, 0};
  if (mu.minimal.length() != mv.minimal.length()) return result;

  auto finish_same = [&](const std::vector<WhiteheadMove>& path) {
    auto chain = concat_chains(concat_chains(mu.certificate.moves, path),
                               invert_chain(mv.certificate.moves));
    result.verdict = OrbitVerdict::Same;
    result.certificate = make_orbit_certificate(u, std::move(chain), v);
  };

  if (mu.minimal == mv.minimal) {
    finish_same({});
    return result;
  }

  // Breadth-first through the minimal level: type I moves and
  // length-preserving type II moves connect all minimal representatives of
  // an orbit (peak reduction).
  const auto& t1 = type_one_moves(u.rank());
  const auto& t2 = type_two_moves(u.rank());
  std::unordered_map<Word, std::pair<Word, WhiteheadMove>, WordHash> parent;
  std::unordered_set<Word, WordHash> seen{mu.minimal};
  std::deque<Word> queue{mu.minimal};
  const std::size_t level_len = mu.minimal.length();

  auto reconstruct = [&](Word node) {
    std::vector<WhiteheadMove> path;
    while (node != mu.minimal) {
      auto it = parent.find(node);
      path.push_back(it->second.second);
      node = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    if (result.nodes >= budget) {
      result.verdict = OrbitVerdict::BudgetExceeded;
      return result;
    }
    Word node = queue.front();
    queue.pop_front();
    ++result.nodes;
    auto try_neighbor = [&](const WhiteheadMove& m) -> bool {
      Word img = cyclic_canonical(apply_whitehead(m, node));
      if (img.length() != level_len) return false;
      if (!seen.insert(img).second) return false;
      parent.emplace(img, std::make_pair(node, m));
      if (img == mv.minimal) {
        auto path = reconstruct(node);
        path.push_back(m);
        finish_same(path);
        return true;
      }
      queue.push_back(img);
      return false;
    };
    for (const WhiteheadMove& m : t1)
      if (try_neighbor(m)) return result;
    for (const WhiteheadMove& m : t2)
      if (try_neighbor(m)) return result;
  }
  return result;  // component exhausted without meeting v: different orbits
}

namespace {

// Least canonical form over all signed generator permutations; the quotient
// collapses type I moves, which cannot change the support count.
Word relabel_canonical(const Word& w) {
  Word best = cyclic_canonical(w);
  for (const WhiteheadMove& m : type_one_moves(w.rank())) {
    Word img = cyclic_canonical(apply_whitehead(m, w));
    if (shortlex_less(img, best)) best = img;
  }
  return best;
}

}  // namespace

SupportResult min_generator_support(const Word& w, std::uint64_t budget) {
  MinimizeResult mw = whitehead_minimize(w);
  const auto& t2 = type_two_moves(w.rank());
  const std::size_t level_len = mw.minimal.length();
  Word start = relabel_canonical(mw.minimal);
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<Word> queue{start};
  SupportResult result;
  result.support = distinct_generator_count(start);
  while (!queue.empty()) {
    if (result.nodes >= budget) return result;  // exact stays false
    Word node = queue.front();
    queue.pop_front();
    ++result.nodes;
    result.support = std::min(result.support, distinct_generator_count(node));
    for (const WhiteheadMove& m : t2) {
      Word raw = cyclic_reduce(apply_whitehead(m, node)).core;
      if (raw.length() != level_len) continue;
      Word img = relabel_canonical(raw);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  result.exact = true;
  return result;
}

WitnessResult orbit_violation_witness(const Endomorphism& phi, const Word& u, std::size_t max_len,
                                      std::uint64_t budget) {
  if (phi.rank() != u.rank()) throw std::invalid_argument("rank mismatch in witness search");
  WitnessResult result;
  MinimizeResult mu = whitehead_minimize(u);
  if (mu.minimal.length() > max_len) {
    result.exhausted = true;
    return result;
  }
  const auto& t1 = type_one_moves(u.rank());
  const auto& t2 = type_two_moves(u.rank());
  std::unordered_set<Word, WordHash> seen{mu.minimal};
  std::deque<Word> queue{mu.minimal};
  bool all_definite = true;
  while (!queue.empty()) {
    if (result.nodes >= budget) return result;  // exhausted stays false
    Word v = queue.front();
    queue.pop_front();
    ++result.nodes;
    SameOrbitResult image_check = same_orbit(apply(phi, v), u, budget);
    if (image_check.verdict == OrbitVerdict::Different) {
      result.witness = v;
      return result;
    }
    if (image_check.verdict == OrbitVerdict::BudgetExceeded) all_definite = false;
    auto expand = [&](const WhiteheadMove& m) {
      Word img = cyclic_canonical(apply_whitehead(m, v));
      if (img.length() > max_len) return;
      if (seen.insert(img).second) queue.push_back(img);
    };
    for (const WhiteheadMove& m : t1) expand(m);
    for (const WhiteheadMove& m : t2) expand(m);
  }
  result.exhausted = all_definite;
  return result;
}

}  // namespace foxprim
