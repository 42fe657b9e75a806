#include "foxprim/nielsen.hpp"

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "foxprim/ring.hpp"

namespace foxprim {

namespace {

std::size_t hash_word(const Word& w) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(w.rank()));
  for (Letter l : w.letters()) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l)) + 0x8000u);
  return static_cast<std::size_t>(h);
}

struct TupleHash {
  std::size_t operator()(const std::vector<Word>& t) const {
    std::size_t h = t.size();
    for (const Word& w : t) h ^= hash_word(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

Word moved_word(const std::vector<Word>& t, const NielsenMove& m) {
  auto i = static_cast<std::size_t>(m.i);
  auto j = static_cast<std::size_t>(m.j);
  Word other = m.sign > 0 ? t[j] : invert(t[j]);
  return m.kind == NielsenMove::Kind::MulRight ? multiply(t[i], other) : multiply(other, t[i]);
}

// All product moves on an m-tuple, in a fixed deterministic order.
std::vector<NielsenMove> product_moves(std::size_t m) {
  std::vector<NielsenMove> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        out.push_back({NielsenMove::Kind::MulRight, static_cast<int>(i), static_cast<int>(j), sign});
        out.push_back({NielsenMove::Kind::MulLeft, static_cast<int>(i), static_cast<int>(j), sign});
      }
    }
  return out;
}

bool tuple_lex_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return shortlex_less(a[k], b[k]);
  }
  return false;
}

}  // namespace

void apply_nielsen_move(std::vector<Word>& tuple, const NielsenMove& m) {
  auto i = static_cast<std::size_t>(m.i);
  auto j = static_cast<std::size_t>(m.j);
  switch (m.kind) {
    case NielsenMove::Kind::Invert:
      tuple[i] = invert(tuple[i]);
      break;
    case NielsenMove::Kind::Swap:
      std::swap(tuple[i], tuple[j]);
      break;
    case NielsenMove::Kind::MulRight:
    case NielsenMove::Kind::MulLeft:
      tuple[i] = moved_word(tuple, m);
      break;
  }
}

NielsenReduction nielsen_reduce(const std::vector<Word>& tuple, std::size_t plateau_budget) {
  if (tuple.empty()) throw std::invalid_argument("nielsen_reduce needs a nonempty tuple");
  const auto moves = product_moves(tuple.size());
  std::vector<Word> cur = tuple;
  std::vector<NielsenMove> log;

  for (;;) {
    // Greedy: apply the first strictly length-reducing product move.
    bool reduced = false;
    for (const NielsenMove& m : moves) {
      Word next = moved_word(cur, m);
      if (next.length() < cur[static_cast<std::size_t>(m.i)].length()) {
        cur[static_cast<std::size_t>(m.i)] = std::move(next);
        log.push_back(m);
        reduced = true;
        break;
      }
    }
    if (reduced) continue;

    // Plateau: breadth-first over length-preserving product moves, looking
    // for a tuple that admits a strict decrease. A decrease found anywhere on
    // the plateau is taken; an exhausted plateau means the total length is
    // minimal, and we keep the lexicographically least tuple seen.
    std::unordered_map<std::vector<Word>, std::pair<std::vector<Word>, NielsenMove>, TupleHash>
        parent;
    std::deque<std::vector<Word>> queue;
    std::unordered_set<std::vector<Word>, TupleHash> seen;
    queue.push_back(cur);
    seen.insert(cur);
    std::vector<Word> best = cur;
    bool descended = false;
    while (!queue.empty() && seen.size() < plateau_budget) {
      std::vector<Word> node = queue.front();
      queue.pop_front();
      if (tuple_lex_less(node, best)) best = node;
      for (const NielsenMove& m : moves) {
        Word next = moved_word(node, m);
        std::size_t old_len = node[static_cast<std::size_t>(m.i)].length();
        if (next.length() < old_len) {
          // reconstruct the path to `node`, then apply m
          std::vector<NielsenMove> path;
          std::vector<Word> walk = node;
          while (walk != cur) {
            auto it = parent.find(walk);
            path.push_back(it->second.second);
            walk = it->second.first;
          }
          for (auto it = path.rbegin(); it != path.rend(); ++it) log.push_back(*it);
          cur = node;
          cur[static_cast<std::size_t>(m.i)] = std::move(next);
          log.push_back(m);
          descended = true;
          break;
        }
        if (next.length() == old_len) {
          std::vector<Word> child = node;
          child[static_cast<std::size_t>(m.i)] = std::move(next);
          if (seen.insert(child).second) {
            parent.emplace(child, std::make_pair(node, m));
            queue.push_back(child);
          }
        }
      }
      if (descended) break;
    }
    if (descended) continue;

    // Minimal: move to the lexicographically least plateau tuple.
    if (best != cur) {
      std::vector<NielsenMove> path;
      std::vector<Word> walk = best;
      while (walk != cur) {
        auto it = parent.find(walk);
        path.push_back(it->second.second);
        walk = it->second.first;
      }
      for (auto it = path.rbegin(); it != path.rend(); ++it) log.push_back(*it);
      cur = best;
    }
    break;
  }

  // Orient each entry to the shortlex-smaller of w and w^-1.
  for (std::size_t i = 0; i < cur.size(); ++i) {
    Word inv = invert(cur[i]);
    if (shortlex_less(inv, cur[i])) {
      cur[i] = std::move(inv);
      log.push_back({NielsenMove::Kind::Invert, static_cast<int>(i), 0, 1});
    }
  }
  return {std::move(cur), std::move(log)};
}

bool is_automorphism(const Endomorphism& phi) {
  Int det = int_det(abelianization_matrix(phi));
  if (det != 1 && det != -1) return false;
  auto reduction = nielsen_reduce(phi.images());
  std::vector<bool> seen(static_cast<std::size_t>(phi.rank()), false);
  for (const Word& w : reduction.tuple) {
    if (w.length() != 1) return false;
    auto g = static_cast<std::size_t>(generator_of(w.letters()[0]) - 1);
    if (seen[g]) return false;
    seen[g] = true;
  }
  return true;
}

}  // namespace foxprim
