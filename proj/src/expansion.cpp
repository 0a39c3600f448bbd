#include "lpp/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "lpp/error.hpp"

namespace lpp {

namespace {

using Mask = std::uint32_t;
using i128 = __int128;

void require_small(const Graph& g) {
  if (g.n() > kExpansionLimit) {
    throw TooLarge("cover expansion: n = " + std::to_string(g.n()) + " exceeds " + std::to_string(kExpansionLimit));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] |= Mask{1} << w;
  }
  return out;
}

// Shared recursion skeleton. `Leaf` is called once per completed cover; the
// three branch hooks let callers track either full covers or just weights.
class CoverWalker {
 public:
  explicit CoverWalker(const Graph& g) : g_(g), adj_(neighbor_masks(g)) {}

  template <class Visitor>
  void run(Visitor& visitor) {
    walk(visitor, g_.n() == 0 ? Mask{0} : (Mask{1} << g_.n()) - 1);
  }

 private:
  template <class Visitor>
  void walk(Visitor& visitor, Mask undecided) {
    if (undecided == 0) {
      visitor.leaf();
      return;
    }
    const auto v = static_cast<Vertex>(std::countr_zero(undecided));
    const Mask rest = undecided & ~(Mask{1} << v);

    visitor.push_excluded(v);
    walk(visitor, rest);
    visitor.pop_excluded(v);

    for (Mask cand = adj_[v] & rest; cand; cand &= cand - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(cand));
      visitor.push_edge(v, u);
      walk(visitor, rest & ~(Mask{1} << u));
      visitor.pop_edge(v, u);
    }

    // Cycles whose smallest vertex is v, over undecided vertices only.
    path_.assign(1, v);
    grow_cycle(visitor, v, rest, rest);
  }

  template <class Visitor>
  void grow_cycle(Visitor& visitor, Vertex start, Mask available, Mask rest) {
    const Vertex tail = path_.back();
    for (Mask cand = adj_[tail] & available; cand; cand &= cand - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(cand));
      path_.push_back(w);
      if (path_.size() >= 3 && path_[1] < w && (adj_[w] >> start & 1)) {
        Mask used = 0;
        for (Vertex x : path_) used |= Mask{1} << x;
        const std::vector<Vertex> cycle = path_;
        visitor.push_cycle(cycle);
        const std::vector<Vertex> saved = path_;
        walk(visitor, rest & ~used);
        path_ = saved;
        visitor.pop_cycle(cycle);
      }
      grow_cycle(visitor, start, available & ~(Mask{1} << w), rest);
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  std::vector<Vertex> path_;
};

struct CoverBuilder {
  const std::function<void(const Cover&)>& visit;
  Cover current;

  void leaf() {
    Cover out = current;
    for (const auto& c : out.components) {
      out.vertex_set.insert(out.vertex_set.end(), c.vertices.begin(), c.vertices.end());
    }
    std::sort(out.vertex_set.begin(), out.vertex_set.end());
    visit(out);
  }
  void push_excluded(Vertex) {}
  void pop_excluded(Vertex) {}
  void push_edge(Vertex a, Vertex b) { current.components.push_back({false, {a, b}}); }
  void pop_edge(Vertex, Vertex) { current.components.pop_back(); }
  void push_cycle(const std::vector<Vertex>& c) {
    current.components.push_back({true, c});
    ++current.cycle_count;
  }
  void pop_cycle(const std::vector<Vertex>&) {
    current.components.pop_back();
    --current.cycle_count;
  }
};

// Accumulates the signed cover weight without materialising covers. All
// weights are bounded by prod_i 2 d_i < 2^79 for n <= 16, so int128 is safe.
struct WeightAccumulator {
  std::vector<long> degree;
  bool laplacian_sign;
  std::vector<i128> stack{1};
  i128 total = 0;

  void leaf() { total += stack.back(); }
  void push_excluded(Vertex v) { stack.push_back(stack.back() * degree[v]); }
  void pop_excluded(Vertex) { stack.pop_back(); }
  // An edge puts two vertices into K: (-1)^2 = 1.
  void push_edge(Vertex, Vertex) { stack.push_back(stack.back()); }
  void pop_edge(Vertex, Vertex) { stack.pop_back(); }
  void push_cycle(const std::vector<Vertex>& c) {
    const bool negative = laplacian_sign && c.size() % 2 == 1;
    stack.push_back(stack.back() * (negative ? -2 : 2));
  }
  void pop_cycle(const std::vector<Vertex>&) { stack.pop_back(); }
};

}  // namespace

void for_each_cover(const Graph& g, const std::function<void(const Cover&)>& visit) {
  require_small(g);
  CoverBuilder builder{visit, {}};
  CoverWalker(g).run(builder);
}

std::vector<Cover> enumerate_covers(const Graph& g) {
  std::vector<Cover> out;
  for_each_cover(g, [&](const Cover& c) { out.push_back(c); });
  return out;
}

std::size_t count_covers(const Graph& g) {
  std::size_t count = 0;
  for_each_cover(g, [&](const Cover&) { ++count; });
  return count;
}

Integer permanent_by_expansion(const Graph& g, MatrixKind kind) {
  require_small(g);
  if (kind != MatrixKind::Laplacian && kind != MatrixKind::SignlessLaplacian) {
    throw InvalidN("cover expansion is defined for Laplacian and signless Laplacian kinds");
  }
  WeightAccumulator acc;
  acc.laplacian_sign = kind == MatrixKind::Laplacian;
  for (Vertex v = 0; v < g.n(); ++v) acc.degree.push_back(static_cast<long>(g.degree(v)));
  CoverWalker(g).run(acc);
  return from_int128(acc.total);
}

}  // namespace lpp
