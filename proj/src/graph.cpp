#include "lpp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace lpp {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) {
      throw InvalidGraph("edge (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside vertex range " + std::to_string(n));
    }
    if (i == j) throw InvalidGraph("loop at vertex " + std::to_string(i));
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidGraph("parallel edge");
    }
  }
  edge_count_ = edges.size();
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v >= n()) throw IndexOutOfRange("vertex " + std::to_string(v) + " >= n = " + std::to_string(n()));
  return adjacency_[v];
}

bool Graph::has_edge(Vertex i, Vertex j) const {
  const auto& list = neighbors(i);
  return std::binary_search(list.begin(), list.end(), j);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex i = 0; i < n(); ++i) {
    for (Vertex j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

// ------------------------------------------------------------- MatrixKind

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless";
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::DegreeDiagonal: return "degree";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "laplacian" || text == "Laplacian" || text == "L") return MatrixKind::Laplacian;
  if (text == "signless" || text == "SignlessLaplacian" || text == "Q") return MatrixKind::SignlessLaplacian;
  if (text == "adjacency" || text == "Adjacency" || text == "A") return MatrixKind::Adjacency;
  if (text == "degree" || text == "DegreeDiagonal" || text == "D") return MatrixKind::DegreeDiagonal;
  throw ParseError("unknown matrix kind '" + std::string(text) + "'");
}

// ------------------------------------------------------------- FamilySpec

namespace {

using Tag = FamilySpec::Tag;

[[noreturn]] void bad_params(const FamilySpec& spec, const std::string& why) {
  throw InvalidFamilyParams(to_string(spec) + ": " + why);
}

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::Path: return "path";
    case Tag::Cycle: return "cycle";
    case Tag::Complete: return "complete";
    case Tag::CompleteBipartite: return "bipartite";
    case Tag::Lollipop: return "lollipop";
    case Tag::Dumbbell: return "dumbbell";
    case Tag::Theta: return "theta";
    case Tag::DisjointUnion: return "union";
  }
  return "?";
}

std::size_t arity(Tag tag) {
  switch (tag) {
    case Tag::Path:
    case Tag::Cycle:
    case Tag::Complete: return 1;
    case Tag::CompleteBipartite:
    case Tag::Lollipop: return 2;
    case Tag::Dumbbell:
    case Tag::Theta: return 3;
    case Tag::DisjointUnion: return 0;
  }
  return 0;
}

}  // namespace

void FamilySpec::validate() const {
  const auto [a, b, c] = params;
  switch (tag) {
    case Tag::Path:
      if (a < 1) bad_params(*this, "path needs n >= 1");
      break;
    case Tag::Cycle:
      if (a < 3) bad_params(*this, "cycle needs n >= 3");
      break;
    case Tag::Complete:
      if (a < 1) bad_params(*this, "complete graph needs n >= 1");
      break;
    case Tag::CompleteBipartite:
      if (a < 1 || b < 1) bad_params(*this, "complete bipartite graph needs a, b >= 1");
      break;
    case Tag::Lollipop:
      if (b < 4 || a < 3 || a > b - 1) bad_params(*this, "lollipop needs 3 <= r <= n-1 and n >= 4");
      break;
    case Tag::Dumbbell:
      if (a < 3 || b < 3 || c < 0) bad_params(*this, "dumbbell needs p, q >= 3 and r >= 0");
      break;
    case Tag::Theta:
      if (a < 0 || b < 0 || c < 0) bad_params(*this, "theta needs p, q, r >= 0");
      if ((a == 0) + (b == 0) + (c == 0) > 1) bad_params(*this, "theta allows at most one empty path");
      break;
    case Tag::DisjointUnion:
      if (parts.empty()) bad_params(*this, "union needs at least one part");
      for (const auto& part : parts) part.validate();
      break;
  }
}

std::size_t FamilySpec::vertex_count() const {
  const auto [a, b, c] = params;
  switch (tag) {
    case Tag::Path:
    case Tag::Cycle:
    case Tag::Complete: return static_cast<std::size_t>(a);
    case Tag::CompleteBipartite: return static_cast<std::size_t>(a + b);
    case Tag::Lollipop: return static_cast<std::size_t>(b);
    case Tag::Dumbbell: return static_cast<std::size_t>(a + b + c);
    case Tag::Theta: return static_cast<std::size_t>(a + b + c + 2);
    case Tag::DisjointUnion: {
      std::size_t total = 0;
      for (const auto& part : parts) total += part.vertex_count();
      return total;
    }
  }
  return 0;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  if (spec.tag == Tag::DisjointUnion) {
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      if (i) os << " + ";
      os << to_string(spec.parts[i]);
    }
    return os.str();
  }
  os << tag_name(spec.tag) << '(';
  for (std::size_t i = 0; i < arity(spec.tag); ++i) {
    if (i) os << ',';
    os << spec.params[i];
  }
  os << ')';
  return os.str();
}

namespace {

FamilySpec parse_atom(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw ParseError("expected name(args) in family spec '" + std::string(text) + "'");
  }
  const std::string_view name = trim(text.substr(0, open));
  std::string_view args = text.substr(open + 1, text.size() - open - 2);

  static const std::pair<std::string_view, Tag> names[] = {
      {"path", Tag::Path},         {"cycle", Tag::Cycle},       {"complete", Tag::Complete},
      {"bipartite", Tag::CompleteBipartite}, {"complete_bipartite", Tag::CompleteBipartite},
      {"lollipop", Tag::Lollipop}, {"dumbbell", Tag::Dumbbell}, {"theta", Tag::Theta}};
  const auto it = std::find_if(std::begin(names), std::end(names), [&](const auto& e) { return e.first == name; });
  if (it == std::end(names)) throw ParseError("unknown family '" + std::string(name) + "'");

  FamilySpec spec;
  spec.tag = it->second;
  std::size_t count = 0;
  while (true) {
    const auto comma = args.find(',');
    const std::string_view token = trim(args.substr(0, comma));
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw ParseError("invalid integer '" + std::string(token) + "' in family spec");
    }
    if (count >= 3) throw ParseError("too many parameters for " + std::string(name));
    spec.params[count++] = value;
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (count != arity(spec.tag)) {
    throw ParseError(std::string(name) + " takes " + std::to_string(arity(spec.tag)) + " parameter(s)");
  }
  return spec;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<FamilySpec> parts;
  while (true) {
    const auto plus = text.find('+');
    parts.push_back(parse_atom(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  if (parts.size() == 1) return parts.front();
  return FamilySpec::disjoint_union(std::move(parts));
}

std::vector<FamilySpec> family_sweep(std::size_t max_n, std::size_t min_n) {
  std::vector<FamilySpec> out;
  for (long n = static_cast<long>(std::max<std::size_t>(min_n, 1)); n <= static_cast<long>(max_n); ++n) {
    out.push_back(FamilySpec::path(n));
    if (n >= 3) out.push_back(FamilySpec::cycle(n));
    if (n >= 4) out.push_back(FamilySpec::complete(n));
    for (long a = 1; 2 * a <= n; ++a) {
      if (n - a >= 2) out.push_back(FamilySpec::complete_bipartite(a, n - a));
    }
    for (long r = 3; r <= n - 1; ++r) out.push_back(FamilySpec::lollipop(r, n));
    for (long p = 3; 2 * p <= n; ++p) {
      for (long q = p; p + q <= n; ++q) out.push_back(FamilySpec::dumbbell(p, q, n - p - q));
    }
    for (long p = 0; 3 * p <= n - 2; ++p) {
      for (long q = std::max(p, 1L); p + 2 * q <= n - 2; ++q) out.push_back(FamilySpec::theta(p, q, n - 2 - p - q));
    }
  }
  return out;
}

// ------------------------------------------------------------- generation

namespace {

void add_path(std::vector<Edge>& edges, const std::vector<Vertex>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(chain[i], chain[i + 1]);
}

void add_cycle(std::vector<Edge>& edges, Vertex first, std::size_t length) {
  for (std::size_t i = 0; i + 1 < length; ++i) edges.emplace_back(first + i, first + i + 1);
  edges.emplace_back(first, first + length - 1);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  spec.validate();
  const auto p = static_cast<std::size_t>(spec.params[0]);
  const auto q = static_cast<std::size_t>(spec.params[1]);
  const auto r = static_cast<std::size_t>(spec.params[2]);
  std::vector<Edge> edges;
  switch (spec.tag) {
    case Tag::Path:
      for (Vertex i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
      return Graph(p, edges);
    case Tag::Cycle:
      add_cycle(edges, 0, p);
      return Graph(p, edges);
    case Tag::Complete:
      for (Vertex i = 0; i < p; ++i) {
        for (Vertex j = i + 1; j < p; ++j) edges.emplace_back(i, j);
      }
      return Graph(p, edges);
    case Tag::CompleteBipartite:
      for (Vertex i = 0; i < p; ++i) {
        for (Vertex j = 0; j < q; ++j) edges.emplace_back(i, p + j);
      }
      return Graph(p + q, edges);
    case Tag::Lollipop: {
      const std::size_t cycle_len = p, n = q;
      add_cycle(edges, 0, cycle_len);
      edges.emplace_back(0, cycle_len);
      for (Vertex i = cycle_len; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    }
    case Tag::Dumbbell: {
      add_cycle(edges, 0, p);
      add_cycle(edges, p + r, q);
      std::vector<Vertex> chain{0};
      for (std::size_t i = 0; i < r; ++i) chain.push_back(p + i);
      chain.push_back(p + r);
      add_path(edges, chain);
      return Graph(p + q + r, edges);
    }
    case Tag::Theta: {
      Vertex next = 2;
      for (std::size_t len : {p, q, r}) {
        std::vector<Vertex> chain{0};
        for (std::size_t i = 0; i < len; ++i) chain.push_back(next++);
        chain.push_back(1);
        add_path(edges, chain);
      }
      return Graph(p + q + r + 2, edges);
    }
    case Tag::DisjointUnion: {
      Graph acc;
      for (const auto& part : spec.parts) acc = disjoint_union(acc, generate(part));
      return acc;
    }
  }
  throw UnsupportedFamily("unknown family tag");
}

IntMatrix build_matrix(const Graph& g, MatrixKind kind) {
  IntMatrix m(g.n());
  const bool with_degree = kind != MatrixKind::Adjacency;
  const long off = kind == MatrixKind::Laplacian ? -1 : (kind == MatrixKind::DegreeDiagonal ? 0 : 1);
  for (Vertex i = 0; i < g.n(); ++i) {
    if (with_degree) m.at(i, i) = static_cast<unsigned long>(g.degree(i));
    if (off == 0) continue;
    for (Vertex j : g.neighbors(i)) m.at(i, j) = off;
  }
  return m;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.m = g.m();
  s.degrees.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const Integer d = static_cast<unsigned long>(g.degree(v));
    s.degrees.push_back(g.degree(v));
    s.sum_d2 += d * d;
    s.sum_d3 += d * d * d;
    s.sum_d4 += d * d * d * d;
  }
  for (auto [i, j] : g.edges()) {
    s.sum_edge_products += Integer(static_cast<unsigned long>(g.degree(i) * g.degree(j)));
  }
  std::sort(s.degrees.begin(), s.degrees.end(), std::greater<>());
  return s;
}

std::size_t count_triangles(const Graph& g) {
  std::size_t count = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      for (Vertex k : g.neighbors(j)) {
        if (k > j && g.has_edge(i, k)) ++count;
      }
    }
  }
  return count;
}

std::size_t count_quadrilaterals(const Graph& g) {
  // Each 4-cycle has two diagonal pairs; each pair {u, w} with c common
  // neighbours closes c*(c-1)/2 of them.
  std::size_t twice = 0;
  std::vector<std::size_t> common(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    std::fill(common.begin(), common.end(), 0);
    for (Vertex a : g.neighbors(u)) {
      for (Vertex w : g.neighbors(a)) {
        if (w > u) ++common[w];
      }
    }
    for (Vertex w = u + 1; w < g.n(); ++w) {
      if (common[w] > 1) twice += common[w] * (common[w] - 1) / 2;
    }
  }
  return twice / 2;
}

std::size_t count_triangles_through_vertex(const Graph& g, Vertex v) {
  const auto& nv = g.neighbors(v);
  std::size_t count = 0;
  for (std::size_t a = 0; a < nv.size(); ++a) {
    for (std::size_t b = a + 1; b < nv.size(); ++b) {
      if (g.has_edge(nv[a], nv[b])) ++count;
    }
  }
  return count;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  for (auto [i, j] : h.edges()) edges.emplace_back(i + g.n(), j + g.n());
  return Graph(g.n() + h.n(), edges);
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<bool> seen(g.n(), false);
  std::queue<Vertex> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == g.n();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> todo;
    todo.push(s);
    while (!todo.empty()) {
      const Vertex v = todo.front();
      todo.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          todo.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// --------------------------------------------------------------------- IO

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw ParseError("\"n\" must be a nonnegative integer");
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("each edge must be a pair of nonnegative integers");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  try {
    return Graph(n, edges);
  } catch (const InvalidGraph& ex) {
    throw ParseError(ex.what());
  }
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
  return graph_from_json(j);
}

}  // namespace lpp
