#pragma once

// Finite induced patches of the square, triangular and hexagonal tilings,
// plus explicit simple graphs ("custom" kind).
//
// Coordinate conventions:
//   square      (x,y) ~ (x±1,y), (x,y±1)
//   triangular  axial; (x,y) ~ (x±1,y), (x,y±1), (x+1,y-1), (x-1,y+1)
//   hexagonal   brick wall; (x,y) ~ (x±1,y), plus (x,y+1) when x+y is even,
//               (x,y-1) otherwise

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <regex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l21/error.hpp"

namespace l21 {

enum class TilingKind { square, triangular, hexagonal, custom };

inline std::string to_string(TilingKind kind) {
  switch (kind) {
    case TilingKind::square: return "square";
    case TilingKind::triangular: return "triangular";
    case TilingKind::hexagonal: return "hexagonal";
    case TilingKind::custom: return "custom";
  }
  return "?";
}

inline TilingKind parse_kind(const std::string& text) {
  if (text == "square") return TilingKind::square;
  if (text == "triangular") return TilingKind::triangular;
  if (text == "hexagonal") return TilingKind::hexagonal;
  if (text == "custom") return TilingKind::custom;
  throw InvalidArgument("unknown grid kind '" + text + "'");
}

// Degree of the infinite tiling (3, 4 or 6); nullopt for custom graphs.
inline std::optional<int> tiling_degree(TilingKind kind) {
  switch (kind) {
    case TilingKind::square: return 4;
    case TilingKind::triangular: return 6;
    case TilingKind::hexagonal: return 3;
    case TilingKind::custom: return std::nullopt;
  }
  return std::nullopt;
}

struct Coord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::string to_string(Coord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

// Unordered edge stored as (low index, high index).
using Edge = std::pair<int, int>;

inline std::vector<Coord> neighbors(TilingKind kind, Coord c) {
  switch (kind) {
    case TilingKind::square:
      return {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    case TilingKind::triangular:
      return {{c.x + 1, c.y},     {c.x - 1, c.y},     {c.x, c.y + 1},
              {c.x, c.y - 1},     {c.x + 1, c.y - 1}, {c.x - 1, c.y + 1}};
    case TilingKind::hexagonal:
      return {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, (c.x + c.y) % 2 == 0 ? c.y + 1 : c.y - 1}};
    case TilingKind::custom:
      break;
  }
  throw InvalidArgument("custom grids have no lattice neighbourhood");
}

inline bool lattice_adjacent(TilingKind kind, Coord a, Coord b) {
  auto nbrs = neighbors(kind, a);
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

// Connected simple undirected graph, optionally embedded in a tiling.
// Immutable after construction. Edges are kept in canonical order, sorted
// by (low index, high index); orientation bitstrings index into that order.
class Grid {
 public:
  static Grid lattice(TilingKind kind, std::vector<Coord> nodes, std::string name = {}) {
    if (kind == TilingKind::custom) throw InvalidArgument("lattice() needs a lattice kind");
    if (nodes.empty()) throw ValidationError("grid must have at least one node");
    {
      auto sorted = nodes;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) throw ValidationError("duplicate coordinate " + to_string(*dup));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(nodes.size()); ++j)
        if (lattice_adjacent(kind, nodes[i], nodes[j])) edges.emplace_back(i, j);
    const int n = static_cast<int>(nodes.size());
    return Grid(kind, n, std::move(edges), std::move(nodes), std::move(name));
  }

  static Grid custom(int n, std::vector<Edge> edges, std::string name = {}) {
    if (n < 1) throw ValidationError("graph must have at least one node");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                              "] references a node outside 0.." + std::to_string(n - 1));
      if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw ValidationError("duplicate edge [" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + "]");
    return Grid(TilingKind::custom, n, std::move(edges), {}, std::move(name));
  }

  TilingKind kind() const noexcept { return kind_; }
  bool is_lattice() const noexcept { return kind_ != TilingKind::custom; }
  int size() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::string& name() const noexcept { return name_; }

  // Empty for custom graphs.
  std::span<const Coord> coords() const noexcept { return coords_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return static_cast<int>(adj_[v].size()); }

  int max_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Canonical index of edge {u,v}, or -1.
  int edge_index(int u, int v) const noexcept {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    return edge_id_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool adjacent(int u, int v) const noexcept { return edge_index(u, v) >= 0; }

  std::string describe_node(int v) const {
    return coords_.empty() ? std::to_string(v) : to_string(coords_[v]);
  }

 private:
  Grid(TilingKind kind, int n, std::vector<Edge> edges, std::vector<Coord> coords, std::string name)
      : kind_(kind),
        n_(n),
        edges_(std::move(edges)),
        coords_(std::move(coords)),
        name_(std::move(name)),
        adj_(n),
        edge_id_(static_cast<std::size_t>(n) * n, -1) {
    for (int e = 0; e < edge_count(); ++e) {
      auto [u, v] = edges_[e];
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      edge_id_[static_cast<std::size_t>(u) * n_ + v] = e;
      edge_id_[static_cast<std::size_t>(v) * n_ + u] = e;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    check_connected();
    if (auto delta = tiling_degree(kind_); delta && max_degree() > *delta)
      throw ValidationError("degree exceeds tiling degree " + std::to_string(*delta));
  }

  void check_connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
    }
    for (int v = 0; v < n_; ++v)
      if (!seen[v])
        throw ConnectivityError("grid is disconnected: node " + describe_node(v) +
                                " is unreachable from node " + describe_node(0));
  }

  TilingKind kind_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<Coord> coords_;
  std::string name_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_id_;
};

inline Grid build_grid(TilingKind kind, std::vector<Coord> nodes) {
  return Grid::lattice(kind, std::move(nodes));
}

// ---------------------------------------------------------------------------
// Named patches

namespace patches {

// w columns by h rows, nodes numbered row-major from the top-left corner.
inline Grid square_rect(int w, int h) {
  if (w < 1 || h < 1) throw InvalidArgument("squareRect needs w,h >= 1");
  std::vector<Coord> nodes;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) nodes.push_back({x, y});
  return Grid::lattice(TilingKind::square, std::move(nodes),
                       "squareRect(" + std::to_string(w) + "," + std::to_string(h) + ")");
}

// Rim nodes 0..5 in cyclic order, centre is node 6.
inline Grid tri_wheel() {
  return Grid::lattice(TilingKind::triangular,
                       {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {0, 0}}, "triWheel()");
}

// Two triangles sharing an edge: 0 top, 1 and 2 the shared edge, 3 bottom.
inline Grid tri_diamond() {
  return Grid::lattice(TilingKind::triangular, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, "triDiamond()");
}

// triWheel() plus one node (2,-1) outside the rim, adjacent to rim nodes 0 and 5.
inline Grid tri_wheel_plus() {
  return Grid::lattice(TilingKind::triangular,
                       {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {0, 0}, {2, -1}},
                       "triWheelPlus()");
}

// k hexagons fused in a row: two rows of 2k+1 nodes.
inline Grid hex_cycle(int k) {
  if (k < 1) throw InvalidArgument("hexCycle needs k >= 1");
  std::vector<Coord> nodes;
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x <= 2 * k; ++x) nodes.push_back({x, y});
  return Grid::lattice(TilingKind::hexagonal, std::move(nodes),
                       "hexCycle(" + std::to_string(k) + ")");
}

// Centre node 0 with its three neighbours.
inline Grid hex_star() {
  return Grid::lattice(TilingKind::hexagonal, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, "hexStar()");
}

inline Grid path(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Grid::custom(n, std::move(edges), "path(" + std::to_string(n) + ")");
}

inline Grid cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Grid::custom(n, std::move(edges), "cycle(" + std::to_string(n) + ")");
}

inline Grid complete(int n) {
  if (n < 1) throw InvalidArgument("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Grid::custom(n, std::move(edges), "complete(" + std::to_string(n) + ")");
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Grid petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Grid::custom(10, std::move(edges), "petersen()");
}

// Planar, cubic, girth 5: outer 5-cycle, middle 10-cycle, inner 5-cycle.
inline Grid dodecahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + 2 * i);
    edges.emplace_back(15 + i, 15 + (i + 1) % 5);
    edges.emplace_back(6 + 2 * i, 15 + i);
  }
  for (int i = 0; i < 10; ++i) edges.emplace_back(5 + i, 5 + (i + 1) % 10);
  return Grid::custom(20, std::move(edges), "dodecahedron()");
}

}  // namespace patches

// Builds a patch from its textual spec, e.g. "squareRect(3,3)", "triWheel()",
// "hexCycle(2)", "path(4)". The spec must belong to the requested kind.
inline Grid patch(TilingKind kind, const std::string& spec) {
  static const std::regex pattern(R"(\s*([A-Za-z]+)\s*\(\s*(\d*)\s*(?:,\s*(\d+)\s*)?\)\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern)) throw InvalidArgument("unknown patch spec '" + spec + "'");
  const std::string name = m[1];
  const int argc = (m[2].length() > 0) + (m[3].length() > 0);
  auto arg = [&](int i) { return std::stoi(m[i + 2].str()); };
  auto expect = [&](TilingKind want, int nargs) {
    if (kind != want)
      throw InvalidArgument("patch '" + name + "' belongs to kind " + to_string(want) + ", not " +
                            to_string(kind));
    if (argc != nargs)
      throw InvalidArgument("patch '" + name + "' takes " + std::to_string(nargs) + " argument(s)");
  };
  if (name == "squareRect") return expect(TilingKind::square, 2), patches::square_rect(arg(0), arg(1));
  if (name == "triWheel") return expect(TilingKind::triangular, 0), patches::tri_wheel();
  if (name == "triWheelPlus") return expect(TilingKind::triangular, 0), patches::tri_wheel_plus();
  if (name == "triDiamond") return expect(TilingKind::triangular, 0), patches::tri_diamond();
  if (name == "hexCycle") return expect(TilingKind::hexagonal, 1), patches::hex_cycle(arg(0));
  if (name == "hexStar") return expect(TilingKind::hexagonal, 0), patches::hex_star();
  if (name == "path") return expect(TilingKind::custom, 1), patches::path(arg(0));
  if (name == "cycle") return expect(TilingKind::custom, 1), patches::cycle(arg(0));
  if (name == "complete") return expect(TilingKind::custom, 1), patches::complete(arg(0));
  if (name == "petersen") return expect(TilingKind::custom, 0), patches::petersen();
  if (name == "dodecahedron") return expect(TilingKind::custom, 0), patches::dodecahedron();
  throw InvalidArgument("unknown patch spec '" + spec + "'");
}

}  // namespace l21
