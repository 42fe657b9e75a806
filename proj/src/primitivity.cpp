#include "foxprim/primitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace foxprim {

bool is_primitive(const Word& w) {
  long long g = 0;
  for (long long e : exponent_vector(w)) g = std::gcd(g, e < 0 ? -e : e);
  if (g != 1) return false;
  return whitehead_minimize(w).minimal.length() == 1;
}

bool cmz_necessary_condition(const Word& w) {
  if (w.rank() != 2) throw std::invalid_argument("the syllable criterion is specific to rank 2");
  Word core = cyclic_reduce(w).core;
  if (core.is_identity()) return false;
  const auto& ls = core.letters();
  const std::size_t n = ls.size();

  // cyclic runs of equal letters; within a reduced word a run is a block of
  // identical letters
  std::vector<std::pair<int, long long>> runs;  // (generator, signed exponent)
  bool single = std::all_of(ls.begin(), ls.end(), [&](Letter l) { return l == ls[0]; });
  if (single) {
    runs.emplace_back(generator_of(ls[0]), static_cast<long long>(n) * (ls[0] > 0 ? 1 : -1));
  } else {
    std::size_t start = 0;
    while (ls[(start + n - 1) % n] == ls[start]) ++start;  // a run boundary
    std::size_t k = 0;
    while (k < n) {
      Letter l = ls[(start + k) % n];
      std::size_t j = k;
      while (j < n && ls[(start + j) % n] == l) ++j;
      runs.emplace_back(generator_of(l), static_cast<long long>(j - k) * (l > 0 ? 1 : -1));
      k = j;
    }
  }
  for (int gen = 1; gen <= 2; ++gen) {
    bool occurs = false, all_plus = true, all_minus = true;
    for (const auto& [g, e] : runs) {
      if (g != gen) continue;
      occurs = true;
      all_plus &= e == 1;
      all_minus &= e == -1;
    }
    if (occurs && (all_plus || all_minus)) return true;
  }
  return false;
}

PrimitiveEnumeratorF2::PrimitiveEnumeratorF2(std::size_t max_len) : words_(2, max_len) {}

std::optional<Word> PrimitiveEnumeratorF2::next() {
  while (auto w = words_.next()) {
    if (w->is_cyclically_reduced() && is_primitive(*w)) return w;
  }
  return std::nullopt;
}

namespace {

// g = a b a^-1 b^-1 for letters a, b over distinct generators
bool is_letter_commutator(const Word& g) {
  const auto& ls = g.letters();
  return ls.size() == 4 && generator_of(ls[0]) != generator_of(ls[1]) &&
         ls[2] == inverse_of(ls[0]) && ls[3] == inverse_of(ls[1]);
}

// g = a^k b^l with k, l >= 2 over distinct generators
bool is_power_pair(const Word& g) {
  const auto& ls = g.letters();
  if (ls.size() < 4) return false;
  std::size_t k = 1;
  while (k < ls.size() && ls[k] == ls[0]) ++k;
  if (k < 2 || k + 2 > ls.size()) return false;
  if (generator_of(ls[k]) == generator_of(ls[0])) return false;
  for (std::size_t j = k + 1; j < ls.size(); ++j)
    if (ls[j] != ls[k]) return false;
  return true;
}

BlockingVerdict make_extendable(const Word& g, Word witness, std::uint64_t nodes,
                                std::size_t bound) {
  if (!witness.is_cyclically_reduced() || !is_primitive(witness) ||
      !is_prefix_no_cancellation(g, witness))
    throw std::logic_error("blocking witness failed validation");
  BlockingVerdict v{BlockingVerdict::Kind::Extendable, std::move(witness), bound, "", nodes};
  return v;
}

}  // namespace

BlockingVerdict blocking_verdict(const Word& g, std::size_t max_len) {
  if (g.rank() == 2) {
    if (is_letter_commutator(g))
      return {BlockingVerdict::Kind::BlockedProven, std::nullopt, max_len, "commutator", 0};
    if (is_power_pair(g))
      return {BlockingVerdict::Kind::BlockedProven, std::nullopt, max_len, "power-pair", 0};
  }
  std::uint64_t nodes = 0;
  const int letter_count = 2 * g.rank();
  std::vector<Letter> all = g.letters();
  std::optional<Word> found;
  // extensions never cancel into g, so each completed sequence is reduced of
  // full length; lengths ascend and letters follow canonical order, making
  // the first hit the shortlex-least witness
  auto dfs = [&](auto&& self, std::size_t remaining) -> bool {
    if (remaining == 0) {
      Word w(g.rank(), all);
      if (!w.is_identity() && w.is_cyclically_reduced()) {
        ++nodes;
        if (is_primitive(w)) {
          found = std::move(w);
          return true;
        }
      }
      return false;
    }
    Letter prev = all.empty() ? 0 : all.back();
    for (int key = 0; key < letter_count; ++key) {
      Letter cand = letter_from_key(key);
      if (prev != 0 && cand == inverse_of(prev)) continue;
      all.push_back(cand);
      if (self(self, remaining - 1)) return true;
      all.pop_back();
    }
    return false;
  };
  for (std::size_t total = std::max<std::size_t>(g.length(), 1); total <= max_len; ++total) {
    if (dfs(dfs, total - g.length()))
      return make_extendable(g, std::move(*found), nodes, max_len);
  }
  return {BlockingVerdict::Kind::BlockedUpTo, std::nullopt, max_len, "", nodes};
}

Word hyperoctahedral_canonical(const Word& w) {
  Word best = w;
  for (const WhiteheadMove& m : type_one_moves(w.rank())) {
    Word img = apply_whitehead(m, w);
    if (shortlex_less(img, best)) best = img;
  }
  return best;
}

namespace {

std::uint64_t fnv64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

void put_i32(std::string& out, std::int32_t v) {
  for (int k = 0; k < 4; ++k)
    out.push_back(static_cast<char>((static_cast<std::uint32_t>(v) >> (8 * k)) & 0xff));
}

void put_word(std::string& out, const Word& w) {
  put_u64(out, w.length());
  for (Letter l : w.letters()) put_i32(out, l);
}

struct Reader {
  const std::string& data;
  std::size_t pos = 0;
  std::uint64_t u64() {
    if (pos + 8 > data.size()) throw std::runtime_error("checkpoint truncated");
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[pos + static_cast<std::size_t>(k)])) << (8 * k);
    pos += 8;
    return v;
  }
  std::int32_t i32() {
    if (pos + 4 > data.size()) throw std::runtime_error("checkpoint truncated");
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[pos + static_cast<std::size_t>(k)])) << (8 * k);
    pos += 4;
    return static_cast<std::int32_t>(v);
  }
  Word word(int rank) {
    std::uint64_t len = u64();
    std::vector<Letter> ls;
    ls.reserve(len);
    for (std::uint64_t k = 0; k < len; ++k) ls.push_back(i32());
    return Word(rank, ls);
  }
  std::string str() {
    std::uint64_t len = u64();
    if (pos + len > data.size()) throw std::runtime_error("checkpoint truncated");
    std::string s = data.substr(pos, len);
    pos += len;
    return s;
  }
};

constexpr char kMagic[4] = {'F', 'P', 'C', 'K'};

}  // namespace

void save_checkpoint(const Checkpoint& cp, const std::string& path) {
  std::string body;
  body.append(kMagic, 4);
  put_u64(body, 1);  // version
  put_u64(body, static_cast<std::uint64_t>(cp.rank));
  put_u64(body, cp.cand_len);
  put_u64(body, cp.max_len);
  put_u64(body, cp.entries.size());
  for (const BlockingEntry& e : cp.entries) {
    put_word(body, e.candidate);
    body.push_back(static_cast<char>(e.verdict.kind));
    if (e.verdict.witness)
      put_word(body, *e.verdict.witness);
    else
      put_u64(body, 0);
    put_u64(body, e.verdict.bound);
    put_u64(body, e.verdict.nodes);
    put_u64(body, e.verdict.rule.size());
    body += e.verdict.rule;
  }
  put_u64(body, fnv64(body));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < 12 || std::memcmp(data.data(), kMagic, 4) != 0)
    throw std::runtime_error("not a checkpoint file: " + path);
  std::uint64_t stored = 0;
  for (int k = 0; k < 8; ++k)
    stored |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[data.size() - 8 + static_cast<std::size_t>(k)])) << (8 * k);
  std::string body = data.substr(0, data.size() - 8);
  if (fnv64(body) != stored) throw std::runtime_error("checkpoint content hash mismatch: " + path);
  Reader r{body, 4};
  std::uint64_t version = r.u64();
  if (version != 1) throw std::runtime_error("unsupported checkpoint version");
  Checkpoint cp;
  cp.rank = static_cast<int>(r.u64());
  cp.cand_len = r.u64();
  cp.max_len = r.u64();
  std::uint64_t count = r.u64();
  for (std::uint64_t k = 0; k < count; ++k) {
    BlockingEntry e;
    e.candidate = r.word(cp.rank);
    auto kind = static_cast<BlockingVerdict::Kind>(r.data[r.pos]);
    ++r.pos;
    e.verdict.kind = kind;
    Word wit = r.word(cp.rank);
    if (kind == BlockingVerdict::Kind::Extendable) e.verdict.witness = wit;
    e.verdict.bound = r.u64();
    e.verdict.nodes = r.u64();
    e.verdict.rule = r.str();
    cp.entries.push_back(std::move(e));
  }
  return cp;
}

BlockingReport blocking_search(int rank, std::size_t cand_len, std::size_t max_len, int workers,
                               const std::string& checkpoint_path,
                               const std::string& resume_path) {
  if (rank < 3)
    throw std::invalid_argument("blocking search requires rank >= 3 (rank 2 has proven blocking words)");
  validate_rank(rank);
  if (workers < 1) workers = 1;

  // canonical candidates: cyclically reduced, least under signed permutations
  std::vector<Word> candidates;
  WordEnumerator en(rank, cand_len);
  while (auto w = en.next()) {
    if (w->is_identity() || !w->is_cyclically_reduced()) continue;
    if (*w == hyperoctahedral_canonical(*w)) candidates.push_back(*w);
  }

  BlockingReport report;
  report.rank = rank;
  report.cand_len = cand_len;
  report.max_len = max_len;
  report.entries.assign(candidates.size(), BlockingEntry{});

  std::unordered_set<Word, WordHash> done;
  if (!resume_path.empty()) {
    Checkpoint cp = load_checkpoint(resume_path);
    if (cp.rank != rank || cp.cand_len != cand_len || cp.max_len != max_len)
      throw std::runtime_error("checkpoint parameters do not match this search");
    for (BlockingEntry& e : cp.entries) {
      auto it = std::find(candidates.begin(), candidates.end(), e.candidate);
      if (it == candidates.end()) throw std::runtime_error("checkpoint contains a foreign candidate");
      report.entries[static_cast<std::size_t>(it - candidates.begin())] = e;
      done.insert(e.candidate);
    }
    report.resumed_entries = cp.entries.size();
  }

  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (!done.count(candidates[k])) todo.push_back(k);

  auto write_progress = [&](std::size_t upto_todo_index) {
    if (checkpoint_path.empty()) return;
    Checkpoint cp;
    cp.rank = rank;
    cp.cand_len = cand_len;
    cp.max_len = max_len;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      bool finished = done.count(candidates[k]) > 0;
      if (!finished) {
        for (std::size_t t = 0; t < upto_todo_index && !finished; ++t)
          finished = todo[t] == k;
      }
      if (finished) {
        BlockingEntry e = report.entries[k];
        e.candidate = candidates[k];
        cp.entries.push_back(std::move(e));
      }
    }
    save_checkpoint(cp, checkpoint_path);
  };

  // candidates are independent; batches keep checkpoints consistent
  const std::size_t batch = static_cast<std::size_t>(workers) * 8;
  for (std::size_t base = 0; base < todo.size(); base += batch) {
    std::size_t hi = std::min(todo.size(), base + batch);
    std::atomic<std::size_t> cursor{base};
    auto work = [&] {
      for (;;) {
        std::size_t t = cursor.fetch_add(1);
        if (t >= hi) break;
        std::size_t k = todo[t];
        report.entries[k] = {candidates[k], blocking_verdict(candidates[k], max_len)};
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    write_progress(hi);
  }

  for (const BlockingEntry& e : report.entries) {
    report.total_nodes += e.verdict.nodes;
    if (e.verdict.kind == BlockingVerdict::Kind::BlockedUpTo)
      report.survivors.push_back(e.candidate);
  }
  return report;
}

}  // namespace foxprim
