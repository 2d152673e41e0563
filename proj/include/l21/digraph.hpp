#pragma once

// Oriented graphs over grids: orientation bitstrings, directed-distance
// constraint pairs, longest simple dipath, girth, automorphisms and
// canonical orientation forms.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <memory>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l21/error.hpp"
#include "l21/lattice.hpp"

namespace l21 {

using Arc = std::pair<int, int>;

// One direction bit per edge in the grid's canonical edge order. Bit e clear
// means edge e = (lo,hi) is oriented lo -> hi; set means hi -> lo.
class Orientation {
 public:
  static constexpr int kMaxEdges = 64;

  Orientation() = default;
  Orientation(std::uint64_t bits, int edges) : bits_(bits), edges_(edges) {
    if (edges < 0 || edges > kMaxEdges)
      throw CapacityError("orientation bitstrings support at most 64 edges");
    if (edges < kMaxEdges) bits_ &= (std::uint64_t{1} << edges) - 1;
  }

  static Orientation parse(const std::string& text) {
    std::uint64_t bits = 0;
    if (text.size() > kMaxEdges) throw CapacityError("orientation bitstring longer than 64 edges");
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (text[i] != '0')
        throw InvalidArgument("orientation bitstring may only contain 0 and 1: '" + text + "'");
    }
    return {bits, static_cast<int>(text.size())};
  }

  std::uint64_t bits() const noexcept { return bits_; }
  int edges() const noexcept { return edges_; }
  bool flipped(int e) const noexcept { return (bits_ >> e) & 1U; }

  Orientation reversed() const { return {~bits_, edges_}; }

  std::string str() const {
    std::string s(edges_, '0');
    for (int e = 0; e < edges_; ++e)
      if (flipped(e)) s[e] = '1';
    return s;
  }

  // Lexicographic order of the bitstrings (edge 0 is the most significant character).
  static bool lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return ((a >> std::countr_zero(diff)) & 1U) == 0;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend bool operator<(const Orientation& a, const Orientation& b) {
    return lex_less(a.bits_, b.bits_);
  }

 private:
  std::uint64_t bits_ = 0;
  int edges_ = 0;
};

// A digraph without loops or opposite arcs. When built from a grid, the arcs
// are stored in the grid's canonical edge order.
class OrientedGraph {
 public:
  static OrientedGraph from_arcs(int n, std::vector<Arc> arcs) {
    if (n < 1) throw ValidationError("digraph must have at least one node");
    OrientedGraph d(n, std::move(arcs), nullptr);
    return d;
  }

  // Arcs must orient every edge of the grid exactly once.
  static OrientedGraph from_arcs(std::shared_ptr<const Grid> grid, std::vector<Arc> arcs) {
    std::vector<Arc> ordered(grid->edge_count(), Arc{-1, -1});
    for (auto [u, v] : arcs) {
      int e = grid->edge_index(u, v);
      if (e < 0)
        throw ValidationError("arc [" + std::to_string(u) + "," + std::to_string(v) +
                              "] is not an edge of the underlying grid");
      if (ordered[e].first >= 0)
        throw ValidationError("edge [" + std::to_string(std::min(u, v)) + "," +
                              std::to_string(std::max(u, v)) + "] is oriented twice");
      ordered[e] = {u, v};
    }
    for (int e = 0; e < grid->edge_count(); ++e)
      if (ordered[e].first < 0)
        throw ValidationError("edge [" + std::to_string(grid->edges()[e].first) + "," +
                              std::to_string(grid->edges()[e].second) + "] has no orientation");
    int n = grid->size();
    return OrientedGraph(n, std::move(ordered), std::move(grid));
  }

  int size() const noexcept { return n_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const int> out(int v) const noexcept { return out_[v]; }
  std::span<const int> in(int v) const noexcept { return in_[v]; }
  std::span<const int> neighbors(int v) const noexcept { return und_[v]; }
  bool has_arc(int u, int v) const noexcept {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  const Grid* underlying() const noexcept { return grid_.get(); }
  const std::shared_ptr<const Grid>& underlying_ptr() const noexcept { return grid_; }

  Orientation orientation() const {
    if (!grid_) throw InvalidArgument("digraph has no underlying grid");
    std::uint64_t bits = 0;
    if (grid_->edge_count() > Orientation::kMaxEdges)
      throw CapacityError("orientation bitstrings support at most 64 edges");
    for (int e = 0; e < arc_count(); ++e)
      if (arcs_[e].first > arcs_[e].second) bits |= std::uint64_t{1} << e;
    return {bits, grid_->edge_count()};
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.n_ != b.n_) return false;
    auto x = a.arcs_, y = b.arcs_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

 private:
  OrientedGraph(int n, std::vector<Arc> arcs, std::shared_ptr<const Grid> grid)
      : n_(n), arcs_(std::move(arcs)), grid_(std::move(grid)), out_(n), in_(n), und_(n) {
    for (auto [u, v] : arcs_) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("arc [" + std::to_string(u) + "," + std::to_string(v) +
                              "] references a node outside 0.." + std::to_string(n - 1));
      if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
      out_[u].push_back(v);
      in_[v].push_back(u);
      und_[u].push_back(v);
      und_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
      std::sort(out_[v].begin(), out_[v].end());
      std::sort(in_[v].begin(), in_[v].end());
      std::sort(und_[v].begin(), und_[v].end());
      if (auto dup = std::adjacent_find(und_[v].begin(), und_[v].end()); dup != und_[v].end())
        throw ValidationError("nodes " + std::to_string(v) + " and " + std::to_string(*dup) +
                              " are joined by more than one arc");
    }
  }

  int n_;
  std::vector<Arc> arcs_;
  std::shared_ptr<const Grid> grid_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> und_;
};

inline OrientedGraph orient(std::shared_ptr<const Grid> grid, const Orientation& directions) {
  if (directions.edges() != grid->edge_count())
    throw InvalidArgument("orientation has " + std::to_string(directions.edges()) +
                          " bits but the grid has " + std::to_string(grid->edge_count()) +
                          " edges");
  std::vector<Arc> arcs;
  arcs.reserve(grid->edge_count());
  for (int e = 0; e < grid->edge_count(); ++e) {
    auto [lo, hi] = grid->edges()[e];
    arcs.push_back(directions.flipped(e) ? Arc{hi, lo} : Arc{lo, hi});
  }
  return OrientedGraph::from_arcs(std::move(grid), std::move(arcs));
}

inline OrientedGraph orient(const Grid& grid, const Orientation& directions) {
  return orient(std::make_shared<const Grid>(grid), directions);
}

inline OrientedGraph orient(const Grid& grid, const std::string& bits) {
  return orient(grid, Orientation::parse(bits));
}

inline OrientedGraph reverse(const OrientedGraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
  if (d.underlying()) return OrientedGraph::from_arcs(d.underlying_ptr(), std::move(arcs));
  return OrientedGraph::from_arcs(d.size(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Distance constraints

enum class Relation : std::uint8_t { none = 0, adjacent = 1, distance2 = 2 };

// Unordered node pairs (u < v) at distance exactly 1 (p1) and exactly 2 (p2).
class ConstraintPairs {
 public:
  ConstraintPairs() = default;
  explicit ConstraintPairs(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n, Relation::none) {}

  int size() const noexcept { return n_; }
  const std::vector<Edge>& p1() const noexcept { return p1_; }
  const std::vector<Edge>& p2() const noexcept { return p2_; }

  Relation relation(int u, int v) const noexcept {
    return rel_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool constrained(int u, int v) const noexcept { return relation(u, v) != Relation::none; }

  void add(int u, int v, Relation r) {
    if (u > v) std::swap(u, v);
    auto& slot = rel_[static_cast<std::size_t>(u) * n_ + v];
    if (slot == Relation::adjacent || slot == r) return;
    if (r == Relation::adjacent && slot == Relation::distance2) {
      p2_.erase(std::find(p2_.begin(), p2_.end(), Edge{u, v}));
    }
    slot = r;
    rel_[static_cast<std::size_t>(v) * n_ + u] = r;
    (r == Relation::adjacent ? p1_ : p2_).emplace_back(u, v);
  }

  void finalize() {
    std::sort(p1_.begin(), p1_.end());
    std::sort(p2_.begin(), p2_.end());
  }

  friend bool operator==(const ConstraintPairs& a, const ConstraintPairs& b) {
    return a.n_ == b.n_ && a.p1_ == b.p1_ && a.p2_ == b.p2_;
  }

 private:
  int n_ = 0;
  std::vector<Relation> rel_;
  std::vector<Edge> p1_;
  std::vector<Edge> p2_;
};

// Depth-2 breadth-first search from every node along out-arcs.
inline ConstraintPairs constraint_pairs(const OrientedGraph& d) {
  ConstraintPairs pairs(d.size());
  for (auto [u, v] : d.arcs()) pairs.add(u, v, Relation::adjacent);
  for (int u = 0; u < d.size(); ++u)
    for (int w : d.out(u))
      for (int v : d.out(w)) {
        // u -> w -> u would need opposite arcs.
        if (v == u) throw std::logic_error("closed dipath of length 2 in an oriented graph");
        pairs.add(u, v, Relation::distance2);
      }
  pairs.finalize();
  return pairs;
}

// Undirected distance 1 and distance 2 pairs of a simple graph.
inline ConstraintPairs undirected_constraint_pairs(const Grid& g) {
  ConstraintPairs pairs(g.size());
  for (auto [u, v] : g.edges()) pairs.add(u, v, Relation::adjacent);
  for (int w = 0; w < g.size(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) pairs.add(nb[i], nb[j], Relation::distance2);
  }
  pairs.finalize();
  return pairs;
}

// ---------------------------------------------------------------------------
// Metrics

struct Dipath {
  int length = 0;         // in arcs
  std::vector<int> nodes; // length + 1 nodes
};

// Exhaustive search over simple directed paths. Ties keep the first path
// found scanning start nodes and out-arcs in ascending order.
inline Dipath longest_dipath(const OrientedGraph& d) {
  const int n = d.size();
  Dipath best{0, {0}};
  std::vector<int> stack;
  std::vector<char> on_path(n, 0);
  bool done = false;

  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(stack.size()) - 1 > best.length) {
      best.length = static_cast<int>(stack.size()) - 1;
      best.nodes = stack;
      if (best.length == n - 1) done = true;
    }
    for (int w : d.out(v)) {
      if (done) return;
      if (on_path[w]) continue;
      on_path[w] = 1;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n && !done; ++s) {
    if (d.out(s).empty()) continue;
    on_path[s] = 1;
    stack.assign(1, s);
    dfs(dfs, s);
    on_path[s] = 0;
  }
  return best;
}

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

namespace detail {

template <class Neighbors>
int girth_of(int n, Neighbors&& nbrs) {
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> queue;
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : nbrs(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

template <class Neighbors>
bool bipartite_of(int n, Neighbors&& nbrs) {
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : nbrs(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Shortest cycle length of the undirected graph; kInfiniteGirth for forests.
inline int girth(const Grid& g) {
  return detail::girth_of(g.size(), [&](int v) { return g.neighbors(v); });
}

inline int girth(const OrientedGraph& d) {
  return detail::girth_of(d.size(), [&](int v) { return d.neighbors(v); });
}

inline bool is_bipartite(const Grid& g) {
  return detail::bipartite_of(g.size(), [&](int v) { return g.neighbors(v); });
}

inline bool is_bipartite(const OrientedGraph& d) {
  return detail::bipartite_of(d.size(), [&](int v) { return d.neighbors(v); });
}

struct DigraphMetrics {
  Dipath longest;
  int girth = kInfiniteGirth;
  bool bipartite = true;
};

inline DigraphMetrics metrics(const OrientedGraph& d) {
  return {longest_dipath(d), girth(d), is_bipartite(d)};
}

// ---------------------------------------------------------------------------
// Symmetry

using Permutation = std::vector<int>;

inline constexpr int kMaxAutomorphismNodes = 16;

// All adjacency-preserving permutations, in lexicographic order.
inline std::vector<Permutation> automorphisms(const Grid& g) {
  const int n = g.size();
  if (n > kMaxAutomorphismNodes)
    throw CapacityError("automorphism search is limited to " +
                        std::to_string(kMaxAutomorphismNodes) + " nodes, got " + std::to_string(n));
  std::vector<Permutation> result;
  Permutation image(n, -1);
  std::vector<char> used(n, 0);

  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      result.push_back(image);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || g.degree(t) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], t);
      if (!ok) continue;
      image[v] = t;
      used[t] = 1;
      self(self, v + 1);
      used[t] = 0;
    }
    image[v] = -1;
  };
  extend(extend, 0);
  return result;
}

// Precomputed action of node permutations on orientation bitstrings.
class OrientationGroup {
 public:
  OrientationGroup(const Grid& g, std::span<const Permutation> perms, bool include_reversal)
      : edges_(g.edge_count()), include_reversal_(include_reversal) {
    if (edges_ > Orientation::kMaxEdges) throw CapacityError("too many edges for bitstrings");
    for (const auto& p : perms) {
      if (static_cast<int>(p.size()) != g.size())
        throw InvalidArgument("permutation size does not match the grid");
      Action a;
      a.target.resize(edges_);
      for (int e = 0; e < edges_; ++e) {
        auto [lo, hi] = g.edges()[e];
        int pl = p[lo], ph = p[hi];
        int t = g.edge_index(pl, ph);
        if (t < 0) throw InvalidArgument("permutation is not an automorphism of the grid");
        a.target[e] = t;
        if (pl > ph) a.flip |= std::uint64_t{1} << t;
      }
      actions_.push_back(std::move(a));
    }
  }

  int edges() const noexcept { return edges_; }
  bool includes_reversal() const noexcept { return include_reversal_; }
  std::size_t order() const noexcept { return actions_.size() * (include_reversal_ ? 2 : 1); }

  template <class Visit>
  void for_each_image(std::uint64_t bits, Visit&& visit) const {
    const std::uint64_t all = edges_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges_) - 1;
    for (const auto& a : actions_) {
      std::uint64_t img = a.flip;
      for (int e = 0; e < edges_; ++e)
        if ((bits >> e) & 1U) img ^= std::uint64_t{1} << a.target[e];
      visit(img);
      if (include_reversal_) visit(img ^ all);
    }
  }

  std::uint64_t canonical(std::uint64_t bits) const {
    std::uint64_t best = bits;
    for_each_image(bits, [&](std::uint64_t img) {
      if (Orientation::lex_less(img, best)) best = img;
    });
    return best;
  }

 private:
  struct Action {
    std::vector<int> target;
    std::uint64_t flip = 0;
  };
  int edges_;
  bool include_reversal_;
  std::vector<Action> actions_;
};

// Lexicographically smallest bitstring in the orbit of d.
inline Orientation canonical_form(const OrientedGraph& d, std::span<const Permutation> group,
                                  bool include_reversal) {
  if (!d.underlying()) throw InvalidArgument("canonical form needs an underlying grid");
  OrientationGroup action(*d.underlying(), group, include_reversal);
  return {action.canonical(d.orientation().bits()), d.underlying()->edge_count()};
}

}  // namespace l21
