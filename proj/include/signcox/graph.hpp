#pragma once

// Signed simply-laced diagrams.
//
// A graph here is a set of vertices 1..n, each carrying a sign +1 or -1,
// together with a symmetric bond matrix m(i,j) taking values
//   m(i,i) = 1,   m(i,j) = 3 for joined vertices,   m(i,j) = 2 otherwise.
// Vertex indices are 1-based in every public interface.

#include <json.hpp>

#include <array>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "signcox/errors.hpp"

namespace signcox {

enum class GraphShape { line, cycle, general };

inline const char* to_string(GraphShape s) {
  switch (s) {
    case GraphShape::line: return "line";
    case GraphShape::cycle: return "cycle";
    default: return "general";
  }
}

struct SignedCoxeterGraph {
  int n = 0;
  std::vector<int> signs;                       // signs[i-1] in {+1,-1}
  std::vector<std::vector<int>> coxeter_matrix; // 0-based storage, values 1/2/3
  GraphShape shape = GraphShape::general;

  int sign(int i) const { return signs[static_cast<std::size_t>(i) - 1]; }

  int m(int i, int j) const {
    return coxeter_matrix[static_cast<std::size_t>(i) - 1]
                         [static_cast<std::size_t>(j) - 1];
  }

  bool adjacent(int i, int j) const { return m(i, j) == 3; }

  // Cyclic index arithmetic on 1..n.  Only meaningful as graph structure on
  // cycles, but defined for any n >= 1.
  int succ(int i) const { return i % n + 1; }
  int pred(int i) const { return (i + n - 2) % n + 1; }

  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
      if (j != i && adjacent(i, j)) out.push_back(j);
    return out;
  }

  bool operator==(const SignedCoxeterGraph& o) const {
    return n == o.n && signs == o.signs && coxeter_matrix == o.coxeter_matrix;
  }
  bool operator!=(const SignedCoxeterGraph& o) const { return !(*this == o); }
};

namespace detail {

inline void check_signs(const std::vector<int>& signs) {
  if (signs.empty()) throw PreconditionError("graph: empty vertex set");
  for (int s : signs)
    if (s != 1 && s != -1)
      throw PreconditionError("graph: signs must be +1 or -1");
}

inline GraphShape detect_shape(const SignedCoxeterGraph& g) {
  const int n = g.n;
  if (n == 1) return GraphShape::line;  // a single vertex is a trivial path
  bool is_line = true;
  bool is_cycle = (n >= 3);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const bool joined = g.m(i, j) == 3;
      const bool path_edge = (j == i + 1);
      const bool wrap_edge = (i == 1 && j == n);
      if (joined != path_edge) is_line = false;
      if (joined != (path_edge || wrap_edge)) is_cycle = false;
    }
  if (is_line) return GraphShape::line;
  if (is_cycle) return GraphShape::cycle;
  return GraphShape::general;
}

}  // namespace detail

// Builds a path (shape = line, needs >= 2 vertices) or a closed loop
// (shape = cycle, needs >= 3 vertices) with the given vertex signs.
inline SignedCoxeterGraph build(GraphShape shape,
                                const std::vector<int>& signs) {
  detail::check_signs(signs);
  const int n = static_cast<int>(signs.size());
  if (shape == GraphShape::line && n < 2)
    throw PreconditionError("build: a line needs at least 2 vertices");
  if (shape == GraphShape::cycle && n < 3)
    throw PreconditionError("build: a cycle needs at least 3 vertices");
  if (shape == GraphShape::general)
    throw PreconditionError("build: shape must be line or cycle");
  SignedCoxeterGraph g;
  g.n = n;
  g.signs = signs;
  g.coxeter_matrix.assign(n, std::vector<int>(n, 2));
  for (int i = 1; i <= n; ++i) g.coxeter_matrix[i - 1][i - 1] = 1;
  for (int i = 1; i < n; ++i)
    g.coxeter_matrix[i - 1][i] = g.coxeter_matrix[i][i - 1] = 3;
  if (shape == GraphShape::cycle)
    g.coxeter_matrix[0][n - 1] = g.coxeter_matrix[n - 1][0] = 3;
  g.shape = shape;
  return g;
}

// Builds an arbitrary simply-laced diagram from an explicit edge list.
// Each edge is (i, j, m) with 1 <= i < j <= n and m in {2, 3}; pairs not
// listed default to m = 2.
inline SignedCoxeterGraph from_edges(
    const std::vector<int>& signs,
    const std::vector<std::array<int, 3>>& edges) {
  detail::check_signs(signs);
  const int n = static_cast<int>(signs.size());
  SignedCoxeterGraph g;
  g.n = n;
  g.signs = signs;
  g.coxeter_matrix.assign(n, std::vector<int>(n, 2));
  for (int i = 1; i <= n; ++i) g.coxeter_matrix[i - 1][i - 1] = 1;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& e : edges) {
    const int i = e[0], j = e[1], m = e[2];
    if (i < 1 || j > n || i >= j)
      throw ParseError("graph: edge endpoints must satisfy 1 <= i < j <= n");
    if (m != 2 && m != 3)
      throw ParseError("graph: bond label must be 2 or 3");
    if (seen[i - 1][j - 1]) throw ParseError("graph: duplicate edge");
    seen[i - 1][j - 1] = true;
    g.coxeter_matrix[i - 1][j - 1] = m;
    g.coxeter_matrix[j - 1][i - 1] = m;
  }
  g.shape = detail::detect_shape(g);
  return g;
}

inline SignedCoxeterGraph negate(const SignedCoxeterGraph& g) {
  SignedCoxeterGraph out = g;
  for (int& s : out.signs) s = -s;
  return out;
}

// 2-colorability of the bond graph (m = 3 edges only).
inline bool is_bipartite(const SignedCoxeterGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n) + 1, 0);
  for (int start = 1; start <= g.n; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == 0) {
          color[w] = -color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// --- JSON document format ---------------------------------------------------
//
// Two accepted forms:
//   {"shape": "line" | "cycle", "signs": [1, -1, ...]}
//   {"n": N, "signs": [...], "edges": [[i, j, m], ...]}
// Signs are +1/-1 integers; edges are 1-based with i < j and m in {2, 3}.

inline SignedCoxeterGraph parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph: document must be an object");
  if (!doc.contains("signs") || !doc["signs"].is_array())
    throw ParseError("graph: missing \"signs\" array");
  std::vector<int> signs;
  for (const auto& v : doc["signs"]) {
    if (!v.is_number_integer())
      throw ParseError("graph: signs must be integers");
    signs.push_back(v.get<int>());
  }
  try {
    if (doc.contains("shape")) {
      if (!doc["shape"].is_string())
        throw ParseError("graph: \"shape\" must be a string");
      const std::string shape = doc["shape"].get<std::string>();
      if (shape == "line") return build(GraphShape::line, signs);
      if (shape == "cycle") return build(GraphShape::cycle, signs);
      throw ParseError("graph: shape must be \"line\" or \"cycle\"");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw ParseError("graph: explicit form needs integer \"n\"");
    const int n = doc["n"].get<int>();
    if (n != static_cast<int>(signs.size()))
      throw ParseError("graph: \"n\" does not match the number of signs");
    std::vector<std::array<int, 3>> edges;
    if (doc.contains("edges")) {
      if (!doc["edges"].is_array())
        throw ParseError("graph: \"edges\" must be an array");
      for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
          throw ParseError("graph: each edge must be [i, j, m]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
      }
    }
    return from_edges(signs, edges);
  } catch (const PreconditionError& e) {
    // Anything structurally wrong with a parsed document is a parse error
    // from the caller's point of view.
    throw ParseError(e.what());
  }
}

inline std::string serialize_graph(const SignedCoxeterGraph& g) {
  nlohmann::json doc;
  // The shape form round-trips through build(), which needs n >= 2 for lines,
  // so a single-vertex graph falls back to the explicit form.
  const bool shape_form =
      (g.shape == GraphShape::line && g.n >= 2) ||
      (g.shape == GraphShape::cycle);
  if (shape_form) {
    doc["shape"] = to_string(g.shape);
    doc["signs"] = g.signs;
    return doc.dump();
  }
  doc["n"] = g.n;
  doc["signs"] = g.signs;
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.m(i, j) == 3) edges.push_back({i, j, 3});
  doc["edges"] = edges;
  return doc.dump();
}

}  // namespace signcox
