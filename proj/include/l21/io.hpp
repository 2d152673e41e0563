#pragma once

// Grid/orientation JSON documents, labels CSV, DOT export, and JSON/text
// renderings of solver and explorer results.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "l21/digraph.hpp"
#include "l21/error.hpp"
#include "l21/explorer.hpp"
#include "l21/lattice.hpp"
#include "l21/solver.hpp"

namespace l21::io {

using Json = nlohmann::ordered_json;

// A parsed grid document: the grid, plus an orientation when "arcs" is present.
struct Document {
  std::shared_ptr<const Grid> grid;
  std::optional<OrientedGraph> oriented;
};

inline Json grid_json(const Grid& g) {
  Json j;
  j["kind"] = to_string(g.kind());
  if (!g.name().empty()) j["name"] = g.name();
  if (g.is_lattice()) {
    Json nodes = Json::array();
    for (Coord c : g.coords()) nodes.push_back({c.x, c.y});
    j["nodes"] = std::move(nodes);
  } else {
    j["n"] = g.size();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
  }
  return j;
}

inline Json document_json(const OrientedGraph& d) {
  Json j = d.underlying() ? grid_json(*d.underlying()) : Json{{"kind", "custom"}, {"n", d.size()}};
  if (!d.underlying()) {
    Json edges = Json::array();
    for (auto [u, v] : d.arcs()) edges.push_back({std::min(u, v), std::max(u, v)});
    j["edges"] = std::move(edges);
  }
  Json arcs = Json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j;
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
  }
}

inline std::vector<std::pair<int, int>> int_pairs(const Json& j, const char* key) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : field<Json>(j, key)) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw InvalidArgument(std::string("entries of '") + key + "' must be [int,int] pairs, got " + item.dump());
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("grid document must be a JSON object");
  const auto kind = parse_kind(detail::field<std::string>(j, "kind"));
  const std::string name = j.contains("name") ? detail::field<std::string>(j, "name") : std::string{};
  Document doc;
  if (kind == TilingKind::custom) {
    auto edges = detail::int_pairs(j, "edges");
    doc.grid = std::make_shared<const Grid>(Grid::custom(detail::field<int>(j, "n"), std::move(edges), name));
  } else {
    std::vector<Coord> nodes;
    for (auto [x, y] : detail::int_pairs(j, "nodes")) nodes.push_back({x, y});
    doc.grid = std::make_shared<const Grid>(Grid::lattice(kind, std::move(nodes), name));
  }
  if (j.contains("arcs")) doc.oriented = OrientedGraph::from_arcs(doc.grid, detail::int_pairs(j, "arcs"));
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Document load_document(const std::string& path) { return parse_document(read_file(path)); }

// Rows of "nodeIndex,color"; blank lines, '#' comments and a non-numeric
// header row are skipped. Every node 0..n-1 must appear exactly once.
inline Labeling parse_labels_csv(const std::string& text, int n) {
  std::vector<int> colors(n, -1);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw InvalidArgument("labels line " + std::to_string(line_no) + ": expected nodeIndex,color");
    int node = 0, color = 0;
    try {
      std::size_t used = 0;
      node = std::stoi(line.substr(0, comma), &used);
      color = std::stoi(line.substr(comma + 1));
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      throw InvalidArgument("labels line " + std::to_string(line_no) + ": not integers");
    }
    if (node < 0 || node >= n)
      throw InvalidArgument("labels line " + std::to_string(line_no) + ": node " + std::to_string(node) +
                            " outside 0.." + std::to_string(n - 1));
    if (color < 0) throw InvalidArgument("labels line " + std::to_string(line_no) + ": negative color");
    if (colors[node] >= 0)
      throw InvalidArgument("labels line " + std::to_string(line_no) + ": node " + std::to_string(node) +
                            " labelled twice");
    colors[node] = color;
  }
  for (int v = 0; v < n; ++v)
    if (colors[v] < 0) throw InvalidArgument("labels: node " + std::to_string(v) + " has no color");
  return Labeling{colors};
}

// Colors in node order, e.g. "1,3,0,2".
inline Labeling parse_labels_inline(const std::string& text, int n) {
  std::vector<int> colors;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      colors.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidArgument("labels: '" + item + "' is not an integer");
    }
  }
  if (static_cast<int>(colors.size()) != n)
    throw InvalidArgument("labels: got " + std::to_string(colors.size()) + " colors for " + std::to_string(n) +
                          " nodes");
  for (int c : colors)
    if (c < 0) throw InvalidArgument("labels: negative color");
  return Labeling{colors};
}

inline std::string labels_csv(const Labeling& f) {
  std::string out;
  for (int v = 0; v < f.size(); ++v) out += std::to_string(v) + "," + std::to_string(f.colors[v]) + "\n";
  return out;
}

// `digraph` with arcs as directed edges; nodes carry their color when given.
inline std::string to_dot(const OrientedGraph& d, const Labeling* labels = nullptr) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < d.size(); ++v) {
    out << "  n" << v << " [label=\"";
    if (d.underlying() && d.underlying()->is_lattice()) {
      Coord c = d.underlying()->coords()[v];
      out << v << " (" << c.x << "," << c.y << ")";
    } else {
      out << v;
    }
    if (labels) out << "\\nf=" << labels->colors[v];
    out << "\"];\n";
  }
  for (auto [u, v] : d.arcs()) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Result renderings

inline Json girth_json(int g) { return g == kInfiniteGirth ? Json("inf") : Json(g); }

inline Json solve_json(const SolveResult& r, bool include_timing = true) {
  Json j;
  j["lambda"] = r.lambda;
  j["labels"] = r.witness.colors;
  j["nodesExpanded"] = r.nodes_expanded;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (include_timing)
    j["elapsedMs"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

inline Json budget_json(const BudgetExhausted& e) {
  return {{"error", "budget exhausted"}, {"lower", e.lower()}, {"upper", e.upper()}, {"nodesExpanded", e.expanded()}};
}

inline Json violations_json(const std::vector<Violation>& vs) {
  Json j;
  j["valid"] = vs.empty();
  Json list = Json::array();
  for (const auto& v : vs)
    list.push_back({{"pair", {v.pair.first, v.pair.second}},
                    {"kind", to_string(v.kind)},
                    {"colors", {v.color_first, v.color_second}}});
  j["violations"] = std::move(list);
  return j;
}

inline Json metrics_json(const OrientedGraph& d) {
  auto m = metrics(d);
  Json j;
  j["longestDipath"] = m.longest.length;
  j["dipath"] = m.longest.nodes;
  j["girth"] = girth_json(m.girth);
  j["bipartite"] = m.bipartite;
  j["lower"] = lower_bound(d);
  j["upper"] = upper_bound(d);
  return j;
}

inline Json histogram_json(const std::map<std::pair<int, int>, long long>& h) {
  Json list = Json::array();
  for (const auto& [key, count] : h)
    list.push_back({{"longestDipath", key.first}, {"lambda", key.second}, {"orientations", count}});
  return list;
}

inline Json sweep_json(const SweepSummary& s) {
  Json j;
  j["patch"] = s.patch;
  j["includeReversal"] = s.include_reversal;
  j["edges"] = s.edges;
  j["groupOrder"] = s.group_order;
  j["orientations"] = s.total_orientations;
  j["classCount"] = s.classes.size();
  Json classes = Json::array();
  for (const auto& c : s.classes) {
    Json e;
    e["canonical"] = c.canonical.str();
    e["classSize"] = c.class_size;
    e["longestDipath"] = c.longest;
    e["girth"] = girth_json(c.girth);
    if (c.lambda) {
      e["lambda"] = *c.lambda;
      e["labels"] = c.witness.colors;
    } else {
      e["lambda"] = nullptr;
      e["bracket"] = {c.bracket->first, c.bracket->second};
    }
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  j["histogram"] = histogram_json(s.histogram);
  j["maxLambda"] = s.max_lambda;
  j["unsolvedClasses"] = s.unsolved_classes;
  return j;
}

inline std::string sweep_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "patch " << s.patch << ": " << s.total_orientations << " orientations, " << s.classes.size()
      << " classes (group order " << s.group_order << (s.include_reversal ? ", with reversal" : "") << ")\n";
  out << std::left << std::setw(std::max(10, s.edges + 2)) << "canonical" << std::right << std::setw(6) << "size"
      << std::setw(4) << "l" << std::setw(8) << "lambda" << "\n";
  for (const auto& c : s.classes) {
    out << std::left << std::setw(std::max(10, s.edges + 2)) << c.canonical.str() << std::right << std::setw(6)
        << c.class_size << std::setw(4) << c.longest << std::setw(8)
        << (c.lambda ? std::to_string(*c.lambda) : std::string("?")) << "\n";
  }
  out << "histogram (l, lambda): orientations\n";
  for (const auto& [key, count] : s.histogram)
    out << "  (" << key.first << ", " << key.second << "): " << count << "\n";
  out << "max lambda: " << s.max_lambda << "\n";
  return out.str();
}

inline Json finding_json(const Finding& f) {
  Json j;
  j["patch"] = f.patch;
  j["message"] = f.message;
  j["orientation"] = f.orientation.str();
  j["longestDipath"] = f.longest;
  j["lambda"] = f.lambda;
  j["labels"] = f.labeling.colors;
  return j;
}

inline Json findings_json(const std::vector<Finding>& fs) {
  Json list = Json::array();
  for (const auto& f : fs) list.push_back(finding_json(f));
  return list;
}

inline Json report_json(const SquareCenterReport& r) {
  Json j;
  j["check"] = "square-center";
  j["confirmed"] = r.confirmed();
  j["orientations"] = r.orientations;
  j["qualifying"] = r.qualifying;
  j["lambdas"] = r.lambdas;
  j["longestDipaths"] = r.longest;
  j["example"] = r.example ? finding_json(*r.example) : Json(nullptr);
  j["counterexamples"] = findings_json(r.counterexamples);
  return j;
}

inline Json wheel_classes_json(const std::vector<WheelClass>& cs) {
  Json list = Json::array();
  for (const auto& c : cs)
    list.push_back({{"canonical", c.canonical.str()},
                    {"classSize", c.size},
                    {"longestDipath", c.longest},
                    {"labels", c.witness.colors}});
  return list;
}

inline Json report_json(const WheelClassReport& r) {
  Json j;
  j["check"] = "tri-wheel";
  j["confirmed"] = r.confirmed();
  j["lambda4Orientations"] = r.lambda4_orientations;
  j["matchingMode"] = r.matching_mode.empty() ? Json(nullptr) : Json(r.matching_mode);
  j["witnessesUse024"] = r.witnesses_use_0_2_4;
  j["classesAutomorphisms"] = wheel_classes_json(r.classes_automorphisms);
  j["classesWithReversal"] = wheel_classes_json(r.classes_with_reversal);
  j["findings"] = findings_json(r.findings);
  return j;
}

inline Json report_json(const Dist2LemmaReport& r) {
  Json j;
  j["check"] = "dist2-lemma";
  j["confirmed"] = r.confirmed();
  j["qualifying"] = r.qualifying;
  j["minLambda"] = r.qualifying ? Json(r.min_lambda) : Json(nullptr);
  j["minLongestDipath"] = r.qualifying ? Json(r.min_longest) : Json(nullptr);
  j["histogram"] = histogram_json(r.histogram);
  j["example"] = r.example ? finding_json(*r.example) : Json(nullptr);
  j["counterexamples"] = findings_json(r.counterexamples);
  return j;
}

inline Json pairs_json(const std::set<std::pair<int, int>>& ps) {
  Json list = Json::array();
  for (auto [l, k] : ps) list.push_back({l, k});
  return list;
}

inline Json report_json(const HexConjectureReport& r) {
  Json j;
  j["check"] = "hex-conjecture";
  j["supported"] = r.supported();
  j["maxLambda"] = r.max_lambda;
  Json sweeps = Json::array();
  for (const auto& s : r.sweeps)
    sweeps.push_back({{"patch", s.patch},
                      {"girth", girth_json(s.girth)},
                      {"orientations", s.orientations},
                      {"maxLambda", s.max_lambda},
                      {"realized", pairs_json(s.realized)}});
  j["sweeps"] = std::move(sweeps);
  j["realized"] = pairs_json(r.realized);
  Json witnesses = Json::array();
  for (const auto& [key, f] : r.witnesses) witnesses.push_back(finding_json(f));
  j["witnesses"] = std::move(witnesses);
  j["refutations"] = findings_json(r.refutations);
  return j;
}

inline Json report_json(const Girth5Report& r) {
  Json j;
  j["check"] = "girth5";
  j["supported"] = r.supported();
  j["maxLambda"] = r.max_lambda;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"graph", e.name}, {"girth", girth_json(e.girth)}, {"planar", e.planar}, {"skipped", e.skipped}};
    if (e.skipped) {
      x["notice"] = e.notice;
    } else {
      x["orientations"] = e.orientations;
      x["exhaustive"] = e.exhaustive;
      x["maxLambda"] = e.max_lambda;
    }
    entries.push_back(std::move(x));
  }
  j["graphs"] = std::move(entries);
  j["refutations"] = findings_json(r.refutations);
  j["nonPlanarAboveFive"] = findings_json(r.nonplanar_above);
  return j;
}

inline Json report_json(const SummaryTableReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json x{{"column", c.column}, {"l", c.row}, {"lambda", c.lambda}, {"status", to_string(c.status)}};
    if (c.witness) x["witness"] = finding_json(*c.witness);
    cells.push_back(std::move(x));
  }
  return {{"table", "oriented grids"}, {"cells", std::move(cells)}, {"allAssertedFound", r.all_asserted_found()}};
}

// Rows by longest dipath, one column per grid family, like the summary table:
// "3 4 5 6?" lists the lambda values witnessed, '?' marks open cells and '!'
// cells the built-in patches could not realise.
inline std::string table_text(const SummaryTableReport& r) {
  const std::vector<std::string> columns = {"squared", "triangular", "hexagonal"};
  const std::map<std::string, std::string> headers = {
      {"squared", "squared (<=6)"}, {"triangular", "triangular (<=8)"}, {"hexagonal", "hexagonal (<=5)"}};
  std::vector<std::string> rows;
  for (const auto& c : r.cells)
    if (std::find(rows.begin(), rows.end(), c.row) == rows.end()) rows.push_back(c.row);
  std::sort(rows.begin(), rows.end(), [](const std::string& a, const std::string& b) {
    auto num = [](const std::string& s) { return std::stoi(s.substr(s.find_first_of("0123456789"))); };
    return num(a) < num(b) || (num(a) == num(b) && a < b);
  });
  std::ostringstream out;
  const int w = 20;
  out << std::left << std::setw(7) << "l";
  for (const auto& c : columns) out << "| " << std::setw(w) << headers.at(c);
  out << "\n" << std::string(7 + 3 * (w + 2), '-') << "\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(7) << row;
    for (const auto& col : columns) {
      std::string cell;
      for (const auto& c : r.cells) {
        if (c.row != row || c.column != col) continue;
        if (!cell.empty()) cell += " ";
        cell += std::to_string(c.lambda);
        if (c.status == CellStatus::open) cell += "?";
        if (c.status == CellStatus::missing || c.status == CellStatus::needs_larger_patch) cell += "!";
      }
      out << "| " << std::setw(w) << cell;
    }
    out << "\n";
  }
  out << "\nwitnesses:\n";
  for (const auto& c : r.cells) {
    out << "  " << std::left << std::setw(11) << c.column << " l " << std::setw(4) << c.row << " lambda " << c.lambda
        << "  " << to_string(c.status);
    if (c.witness) out << "  " << c.witness->patch << " " << c.witness->orientation.str();
    out << "\n";
  }
  return out.str();
}

}  // namespace l21::io
