#pragma once

// Exact oriented L(2,1)-labeling number: verification, bounds, an iterative
// deepening backtracking engine with forward checking, and an exhaustive
// enumeration oracle.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "l21/digraph.hpp"
#include "l21/error.hpp"
#include "l21/lattice.hpp"

namespace l21 {

struct Labeling {
  std::vector<int> colors;

  int span() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  }
  int size() const noexcept { return static_cast<int>(colors.size()); }

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

enum class ViolationKind { adjacent_too_close, distance2_equal };

inline std::string to_string(ViolationKind k) {
  return k == ViolationKind::adjacent_too_close ? "AdjacentTooClose" : "Distance2Equal";
}

struct Violation {
  Edge pair;
  ViolationKind kind;
  int color_first;
  int color_second;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SolveResult {
  int lambda = 0;
  Labeling witness;
  int lower = 0;
  int upper = 0;
  long long nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline std::vector<Violation> verify(const ConstraintPairs& pairs, const Labeling& f) {
  if (f.size() != pairs.size())
    throw InvalidArgument("labeling has " + std::to_string(f.size()) + " colors for " +
                          std::to_string(pairs.size()) + " nodes");
  for (int v = 0; v < f.size(); ++v)
    if (f.colors[v] < 0) throw InvalidArgument("negative color at node " + std::to_string(v));
  std::vector<Violation> out;
  for (auto [u, v] : pairs.p1())
    if (std::abs(f.colors[u] - f.colors[v]) <= 1)
      out.push_back({{u, v}, ViolationKind::adjacent_too_close, f.colors[u], f.colors[v]});
  for (auto [u, v] : pairs.p2())
    if (f.colors[u] == f.colors[v])
      out.push_back({{u, v}, ViolationKind::distance2_equal, f.colors[u], f.colors[v]});
  std::sort(out.begin(), out.end(),
            [](const Violation& a, const Violation& b) { return a.pair < b.pair; });
  return out;
}

inline std::vector<Violation> verify(const OrientedGraph& d, const Labeling& f) {
  if (f.size() != d.size())
    throw InvalidArgument("labeling has " + std::to_string(f.size()) + " colors for " +
                          std::to_string(d.size()) + " nodes");
  return verify(constraint_pairs(d), f);
}

// ---------------------------------------------------------------------------
// Bounds

namespace detail {

inline constexpr int kMaxCliqueForBound = 10;

// Minimum span of k mutually constrained nodes: k-1 plus the fewest
// distance-1 pairs that must sit next to each other in sorted color order.
inline int clique_span(const ConstraintPairs& pairs, const std::vector<int>& clique) {
  const int k = static_cast<int>(clique.size());
  if (k <= 1) return 0;
  const int full = (1 << k) - 1;
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(static_cast<std::size_t>(1 << k) * k, inf);
  for (int i = 0; i < k; ++i) dp[(std::size_t{1} << i) * k + i] = 0;
  for (int mask = 1; mask <= full; ++mask)
    for (int last = 0; last < k; ++last) {
      int cur = dp[static_cast<std::size_t>(mask) * k + last];
      if (cur == inf) continue;
      for (int nxt = 0; nxt < k; ++nxt) {
        if (mask & (1 << nxt)) continue;
        int cost = cur + (pairs.relation(clique[last], clique[nxt]) == Relation::adjacent);
        auto& slot = dp[static_cast<std::size_t>(mask | (1 << nxt)) * k + nxt];
        slot = std::min(slot, cost);
      }
    }
  int best = inf;
  for (int last = 0; last < k; ++last) best = std::min(best, dp[static_cast<std::size_t>(full) * k + last]);
  return k - 1 + best;
}

// Greedy mutually-constrained sets seeded at every node (closed neighbourhood first).
inline int clique_bound(const ConstraintPairs& pairs, const std::vector<std::vector<int>>& p1_nbrs,
                        const std::vector<std::vector<int>>& p2_nbrs) {
  int best = 0;
  for (int seed = 0; seed < pairs.size(); ++seed) {
    std::vector<int> clique{seed};
    auto consider = [&](int cand) {
      if (static_cast<int>(clique.size()) >= kMaxCliqueForBound) return;
      for (int c : clique)
        if (!pairs.constrained(c, cand)) return;
      clique.push_back(cand);
    };
    for (int w : p1_nbrs[seed]) consider(w);
    for (int w : p2_nbrs[seed]) consider(w);
    best = std::max(best, clique_span(pairs, clique));
  }
  return best;
}

inline std::vector<std::vector<int>> neighbor_lists(int n, const std::vector<Edge>& pairs) {
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : pairs) {
    out[u].push_back(v);
    out[v].push_back(u);
  }
  for (auto& l : out) std::sort(l.begin(), l.end());
  return out;
}

inline int dipath_bound(int longest) {
  if (longest <= 0) return 0;
  if (longest == 1) return 2;
  if (longest <= 3) return 3;
  return 4;
}

template <class Neighbors>
ConstraintPairs undirected_pairs_of(int n, Neighbors&& nbrs) {
  ConstraintPairs pairs(n);
  for (int u = 0; u < n; ++u)
    for (int v : nbrs(u))
      if (u < v) pairs.add(u, v, Relation::adjacent);
  for (int w = 0; w < n; ++w) {
    auto nb = nbrs(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) pairs.add(nb[i], nb[j], Relation::distance2);
  }
  pairs.finalize();
  return pairs;
}

inline int lower_bound_of(const ConstraintPairs& pairs, int dipath_lower) {
  auto p1 = neighbor_lists(pairs.size(), pairs.p1());
  auto p2 = neighbor_lists(pairs.size(), pairs.p2());
  return std::max(dipath_lower, clique_bound(pairs, p1, p2));
}

inline int trivial_upper(int n) { return 2 * (n - 1); }

}  // namespace detail

inline int lower_bound(const OrientedGraph& d) {
  return detail::lower_bound_of(constraint_pairs(d), detail::dipath_bound(longest_dipath(d).length));
}

// ---------------------------------------------------------------------------
// Search engine

inline constexpr int kMaxSpan = 62;

class LabelingSearch {
 public:
  LabelingSearch(const ConstraintPairs& pairs, std::optional<long long> budget)
      : n_(pairs.size()),
        budget_(budget),
        p1_(detail::neighbor_lists(n_, pairs.p1())),
        p2_(detail::neighbor_lists(n_, pairs.p2())),
        order_(n_),
        pos_(n_) {
    std::iota(order_.begin(), order_.end(), 0);
    auto weight = [&](int v) { return 2 * static_cast<int>(p1_[v].size()) + static_cast<int>(p2_[v].size()); };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return weight(a) > weight(b); });
    for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;
  }

  class Exhausted {};

  long long expanded() const noexcept { return expanded_; }

  // Lexicographically first labeling (under the variable order) with span <= sigma.
  std::optional<Labeling> feasible(int sigma) {
    if (sigma > kMaxSpan) throw CapacityError("span above " + std::to_string(kMaxSpan) + " not supported");
    if (n_ == 0) return Labeling{};
    const std::uint64_t all = (std::uint64_t{1} << (sigma + 1)) - 1;
    domains_.assign(static_cast<std::size_t>(n_ + 1) * n_, all);
    colors_.assign(n_, -1);
    sigma_ = sigma;
    if (!extend(0)) return std::nullopt;
    return Labeling{colors_};
  }

 private:
  std::uint64_t* level(int depth) { return domains_.data() + static_cast<std::size_t>(depth) * n_; }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int v = order_[depth];
    std::uint64_t dom = level(depth)[v];
    // Complementing colors maps solutions to solutions, so the first node
    // never needs a color above sigma/2.
    if (depth == 0) dom &= (std::uint64_t{1} << (sigma_ / 2 + 1)) - 1;
    while (dom) {
      const int c = std::countr_zero(dom);
      dom &= dom - 1;
      if (budget_ && expanded_ >= *budget_) throw Exhausted{};
      ++expanded_;
      std::uint64_t* cur = level(depth);
      std::uint64_t* nxt = level(depth + 1);
      std::copy(cur, cur + n_, nxt);
      nxt[v] = std::uint64_t{1} << c;
      const std::uint64_t near = (std::uint64_t{7} << c) >> 1;
      bool ok = true;
      for (int u : p1_[v])
        if (pos_[u] > depth && (nxt[u] &= ~near) == 0) {
          ok = false;
          break;
        }
      if (ok)
        for (int u : p2_[v])
          if (pos_[u] > depth && (nxt[u] &= ~(std::uint64_t{1} << c)) == 0) {
            ok = false;
            break;
          }
      if (!ok) continue;
      colors_[v] = c;
      if (extend(depth + 1)) return true;
      colors_[v] = -1;
    }
    return false;
  }

  int n_;
  std::optional<long long> budget_;
  std::vector<std::vector<int>> p1_;
  std::vector<std::vector<int>> p2_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<std::uint64_t> domains_;
  std::vector<int> colors_;
  int sigma_ = 0;
  long long expanded_ = 0;
};

// Iterative deepening on the span from `lower` to `upper`.
inline SolveResult solve_constraints(const ConstraintPairs& pairs, int lower, int upper,
                                     std::optional<long long> budget = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  LabelingSearch search(pairs, budget);
  SolveResult result;
  result.lower = lower;
  result.upper = upper;
  for (int sigma = lower; sigma <= upper; ++sigma) {
    std::optional<Labeling> found;
    try {
      found = search.feasible(sigma);
    } catch (const LabelingSearch::Exhausted&) {
      throw BudgetExhausted(sigma, upper, search.expanded());
    }
    if (found) {
      result.lambda = sigma;
      result.witness = std::move(*found);
      result.nodes_expanded = search.expanded();
      result.elapsed = std::chrono::steady_clock::now() - start;
      return result;
    }
  }
  throw std::logic_error("no labeling within the upper bound " + std::to_string(upper));
}

inline SolveResult solve_lambda_undirected(const Grid& g, std::optional<long long> budget = std::nullopt) {
  auto pairs = undirected_constraint_pairs(g);
  int lower = detail::lower_bound_of(pairs, g.edge_count() > 0 ? 2 : 0);
  int upper = g.is_lattice() ? *tiling_degree(g.kind()) + 2 : detail::trivial_upper(g.size());
  upper = std::max(std::min(upper, detail::trivial_upper(g.size())), lower);
  return solve_constraints(pairs, lower, upper, budget);
}

inline constexpr int kMaxNodesForUndirectedUpper = 10;

// Lattice grids: the tiling's undirected span Delta+2. Other graphs with at
// most 10 nodes: the exact undirected span. Otherwise 2(n-1).
inline int upper_bound(const OrientedGraph& d) {
  const Grid* g = d.underlying();
  if (g && g->is_lattice()) return std::min(*tiling_degree(g->kind()) + 2, detail::trivial_upper(d.size()));
  if (d.size() <= kMaxNodesForUndirectedUpper) {
    auto pairs = detail::undirected_pairs_of(d.size(), [&](int v) { return d.neighbors(v); });
    int lower = detail::lower_bound_of(pairs, d.arc_count() > 0 ? 2 : 0);
    return solve_constraints(pairs, lower, std::max(lower, detail::trivial_upper(d.size()))).lambda;
  }
  return detail::trivial_upper(d.size());
}

inline SolveResult solve_lambda(const OrientedGraph& d, std::optional<long long> budget = std::nullopt) {
  auto pairs = constraint_pairs(d);
  int lower = detail::lower_bound_of(pairs, detail::dipath_bound(longest_dipath(d).length));
  int upper = std::max(upper_bound(d), lower);
  return solve_constraints(pairs, lower, upper, budget);
}

// ---------------------------------------------------------------------------
// Exhaustive oracle. Works from the arc set directly, without
// constraint_pairs(), so it checks the engine independently.

inline constexpr long long kBruteForceLimit = 10'000'000;

inline std::optional<int> brute_force_lambda(const OrientedGraph& d, int sigma_max) {
  const int n = d.size();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= sigma_max + 1;
    if (total > kBruteForceLimit)
      throw CapacityError("(sigmaMax+1)^n exceeds " + std::to_string(kBruteForceLimit));
  }
  std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
  for (auto [u, v] : d.arcs()) arc[u][v] = 1;
  std::vector<std::pair<int, int>> far, two;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (arc[u][v] || arc[v][u]) {
        far.emplace_back(u, v);
        continue;
      }
      bool via = false;
      for (int w = 0; w < n && !via; ++w)
        via = (arc[u][w] && arc[w][v]) || (arc[v][w] && arc[w][u]);
      if (via) two.emplace_back(u, v);
    }
  std::vector<int> f(n);
  for (int sigma = 0; sigma <= sigma_max; ++sigma) {
    std::fill(f.begin(), f.end(), 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : far)
        if (std::abs(f[u] - f[v]) < 2) {
          ok = false;
          break;
        }
      if (ok)
        for (auto [u, v] : two)
          if (f[u] == f[v]) {
            ok = false;
            break;
          }
      if (ok) return sigma;
      int i = 0;
      while (i < n && f[i] == sigma) f[i++] = 0;
      if (i == n) break;
      ++f[i];
    }
  }
  return std::nullopt;
}

}  // namespace l21
