#include "lpa/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lpa {

GraphError::GraphError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void Graph::check_fresh(const std::string& name) const {
  if (!is_identifier(name)) throw GraphError("invalid identifier `" + name + "`");
  if (vertex_index_.count(name) || edge_index_.count(name))
    throw GraphError("duplicate identifier `" + name + "`");
}

VertexId Graph::add_vertex(const std::string& name) {
  check_fresh(name);
  auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(name);
  out_.emplace_back();
  in_.emplace_back();
  vertex_index_.emplace(name, id);
  return id;
}

EdgeId Graph::add_edge(const std::string& name, VertexId source, VertexId range) {
  check_fresh(name);
  if (source >= vertices_.size() || range >= vertices_.size())
    throw GraphError("edge `" + name + "` has an unknown endpoint");
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({name, source, range});
  out_[source].push_back(id);
  in_[range].push_back(id);
  edge_index_.emplace(name, id);
  return id;
}

EdgeId Graph::add_edge(const std::string& name, std::string_view source, std::string_view range) {
  auto s = find_vertex(source);
  if (!s) throw GraphError("unknown endpoint `" + std::string(source) + "`");
  auto r = find_vertex(range);
  if (!r) throw GraphError("unknown endpoint `" + std::string(range) + "`");
  return add_edge(name, *s, *r);
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto tokens = split_line(line);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;

    auto expect_ident = [&](const Token& t) {
      if (!is_identifier(t.text))
        throw GraphError("expected identifier, found `" + t.text + "`", line_no, t.column);
    };
    auto expect_fresh = [&](const Token& t) {
      expect_ident(t);
      if (g.vertex_index_.count(t.text) || g.edge_index_.count(t.text))
        throw GraphError("duplicate identifier `" + t.text + "`", line_no, t.column);
    };
    auto endpoint = [&](const Token& t) {
      expect_ident(t);
      auto v = g.find_vertex(t.text);
      if (!v) throw GraphError("unknown endpoint `" + t.text + "`", line_no, t.column);
      return *v;
    };

    const auto& kw = tokens[0];
    if (kw.text == "vertex") {
      if (tokens.size() != 2)
        throw GraphError("`vertex` takes exactly one identifier", line_no,
                         tokens.size() > 2 ? tokens[2].column : kw.column + kw.text.size());
      expect_fresh(tokens[1]);
      g.add_vertex(tokens[1].text);
    } else if (kw.text == "edge") {
      if (tokens.size() != 4)
        throw GraphError("`edge` takes an identifier, a source and a range", line_no,
                         tokens.size() > 4 ? tokens[4].column : kw.column + kw.text.size());
      expect_fresh(tokens[1]);
      VertexId s = endpoint(tokens[2]);
      VertexId r = endpoint(tokens[3]);
      g.add_edge(tokens[1].text, s, r);
    } else {
      throw GraphError("expected `vertex` or `edge`, found `" + kw.text + "`", line_no,
                       kw.column);
    }
  }
  return g;
}

std::string Graph::to_text() const {
  std::ostringstream os;
  for (const auto& v : vertices_) os << "vertex " << v << '\n';
  for (const auto& e : edges_)
    os << "edge " << e.name << ' ' << vertices_[e.source] << ' ' << vertices_[e.range] << '\n';
  return os.str();
}

VertexSet regular_vertices(const Graph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.is_regular(v)) out.push_back(v);
  return out;
}

std::vector<CycleWitness> cycles(const Graph& g) {
  // Each cycle is found once, rooted at its smallest vertex, by a DFS that
  // only walks through larger vertices.
  std::vector<CycleWitness> found;
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> path;

  std::function<void(VertexId, VertexId)> walk = [&](VertexId root, VertexId at) {
    for (EdgeId e : g.out_edges(at)) {
      VertexId next = g.range(e);
      if (next == root) {
        path.push_back(e);
        CycleWitness c;
        // least rotation of the edge sequence
        std::vector<EdgeId> best = path;
        for (std::size_t k = 1; k < path.size(); ++k) {
          std::vector<EdgeId> rot(path.begin() + static_cast<std::ptrdiff_t>(k), path.end());
          rot.insert(rot.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k));
          if (rot < best) best = std::move(rot);
        }
        c.edges = std::move(best);
        for (EdgeId f : c.edges) c.vertices.push_back(g.source(f));
        std::sort(c.vertices.begin(), c.vertices.end());
        found.push_back(std::move(c));
        path.pop_back();
      } else if (next > root && !on_path[next]) {
        on_path[next] = true;
        path.push_back(e);
        walk(root, next);
        path.pop_back();
        on_path[next] = false;
      }
    }
  };

  for (VertexId root = 0; root < n; ++root) {
    on_path[root] = true;
    walk(root, root);
    on_path[root] = false;
  }
  std::sort(found.begin(), found.end(), [](const CycleWitness& a, const CycleWitness& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return found;
}

bool cycle_has_exit(const Graph& g, const CycleWitness& c) {
  for (EdgeId on_cycle : c.edges) {
    for (EdgeId e : g.out_edges(g.source(on_cycle)))
      if (e != on_cycle) return true;
  }
  return false;
}

VertexSet reachable_from(const Graph& g, std::span<const VertexId> from) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack(from.begin(), from.end());
  for (VertexId v : from) seen.at(v) = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId r = g.range(e);
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  VertexSet out;
  for (VertexId v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

VertexSet hereditary_saturated_closure(const Graph& g, std::span<const VertexId> h) {
  VertexSet current = reachable_from(g, h);
  for (;;) {
    std::vector<bool> in(g.num_vertices(), false);
    for (VertexId v : current) in[v] = true;
    VertexSet added;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (in[v] || !g.is_regular(v)) continue;
      auto outs = g.out_edges(v);
      if (std::all_of(outs.begin(), outs.end(), [&](EdgeId e) { return in[g.range(e)]; }))
        added.push_back(v);
    }
    if (added.empty()) return current;
    current.insert(current.end(), added.begin(), added.end());
    current = reachable_from(g, current);
  }
}

std::string format_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += g.edge_name(edges[i]);
  }
  return out + "]";
}

SimplicityReport is_simple_lpa(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexId seed[] = {v};
    auto closure = hereditary_saturated_closure(g, seed);
    if (closure.size() != g.num_vertices())
      return {false, "closure of {" + g.vertex_name(v) +
                         "} is a proper hereditary saturated subset"};
  }
  for (const auto& c : cycles(g)) {
    if (!cycle_has_exit(g, c)) return {false, "cycle " + format_edges(g, c.edges) + " has no exit"};
  }
  return {true, {}};
}

}  // namespace lpa
