#include "lpa/fixtures.hpp"

namespace lpa::fixtures {

Graph rose(unsigned n) {
  static const char* letters[] = {"e", "f", "g", "h"};
  Graph g;
  VertexId v = g.add_vertex("v");
  for (unsigned i = 0; i < n; ++i)
    g.add_edge(n <= 4 ? std::string(letters[i]) : "e" + std::to_string(i + 1), v, v);
  return g;
}

Graph line(unsigned n) {
  Graph g;
  for (unsigned i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (unsigned i = 1; i < n; ++i) g.add_edge("e" + std::to_string(i), i - 1, i);
  return g;
}

Graph two_cycle() {
  Graph g;
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("e", "u", "w");
  g.add_edge("f", "w", "u");
  return g;
}

Graph ideal_audit_graph() {
  Graph g;
  for (const char* v : {"u1", "u2", "w", "z"}) g.add_vertex(v);
  g.add_edge("a", "u1", "w");
  g.add_edge("b", "u2", "w");
  g.add_edge("c", "w", "z");
  return g;
}

Graph two_isolated() {
  Graph g;
  g.add_vertex("v1");
  g.add_vertex("v2");
  return g;
}

std::vector<Named> standard_set() {
  std::vector<Named> out;
  for (unsigned n = 1; n <= 4; ++n) out.push_back({"R" + std::to_string(n), rose(n)});
  for (unsigned n = 2; n <= 6; ++n) out.push_back({"A" + std::to_string(n), line(n)});
  out.push_back({"T", ideal_audit_graph()});
  out.push_back({"I2", two_isolated()});
  return out;
}

}  // namespace lpa::fixtures
