#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::fixtures {

/// One vertex v with n loops, named e, f, g, h for n <= 4 and e1..en above.
Graph rose(unsigned n);
/// v1 -> v2 -> ... -> vn through edges e1..e(n-1).
Graph line(unsigned n);
/// e: u -> w, f: w -> u.
Graph two_cycle();
/// a: u1 -> w, b: u2 -> w, c: w -> z.
Graph ideal_audit_graph();
/// v1, v2 and no edges.
Graph two_isolated();

struct Named {
  std::string name;
  Graph graph;
};

/// R1..R4, A2..A6, T and the two isolated vertices.
std::vector<Named> standard_set();

}  // namespace lpa::fixtures
