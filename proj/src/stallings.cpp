#include "foxprim/stallings.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace foxprim {

namespace {

// Union-find with path compression.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  // merges b into a's class; returns the representative
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
    return a;
  }
};

}  // namespace

int subgroup_rank(const std::vector<Word>& generators) {
  if (generators.empty()) return 0;
  int rank = generators.front().rank();
  for (const Word& w : generators)
    if (w.rank() != rank) throw std::invalid_argument("subgroup generators have mismatched ranks");

  // Build the wedge of loops: vertex 0 is the base point; each word
  // contributes a path of labeled edges back to the base.
  struct Edge {
    int from, to;
    int label;  // generator index, oriented from -> to
  };
  std::vector<Edge> edges;
  int next_vertex = 1;
  for (const Word& w : generators) {
    if (w.is_identity()) continue;
    int prev = 0;
    const auto& ls = w.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      int to = (k + 1 == ls.size()) ? 0 : next_vertex++;
      Letter l = ls[k];
      if (l > 0)
        edges.push_back({prev, to, generator_of(l)});
      else
        edges.push_back({to, prev, generator_of(l)});
      prev = to;
    }
  }
  if (edges.empty()) return 0;

  // Fold: whenever two edges with the same label leave (or enter) the same
  // vertex, identify their endpoints; repeat to a fixed point.
  Dsu dsu(static_cast<std::size_t>(next_vertex));
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_edge;  // (vertex, label) -> target
    std::map<std::pair<int, int>, int> in_edge;   // (vertex, label) -> source
    for (const Edge& e : edges) {
      int from = dsu.find(e.from);
      int to = dsu.find(e.to);
      auto [it_out, new_out] = out_edge.emplace(std::make_pair(from, e.label), to);
      if (!new_out && dsu.find(it_out->second) != to) {
        dsu.unite(dsu.find(it_out->second), to);
        changed = true;
        break;
      }
      auto [it_in, new_in] = in_edge.emplace(std::make_pair(to, e.label), from);
      if (!new_in && dsu.find(it_in->second) != from) {
        dsu.unite(dsu.find(it_in->second), from);
        changed = true;
        break;
      }
    }
  }

  // Count distinct folded vertices and edges; rank = E - V + 1.
  std::map<std::pair<int, std::pair<int, int>>, bool> folded_edges;
  std::map<int, bool> vertices;
  for (const Edge& e : edges) {
    int from = dsu.find(e.from);
    int to = dsu.find(e.to);
    vertices[from] = vertices[to] = true;
    folded_edges[{e.label, {from, to}}] = true;
  }
  auto e_count = static_cast<long long>(folded_edges.size());
  auto v_count = static_cast<long long>(vertices.size());
  return static_cast<int>(e_count - v_count + 1);
}

bool is_monomorphism(const Endomorphism& phi) { return subgroup_rank(phi.images()) == phi.rank(); }

}  // namespace foxprim
