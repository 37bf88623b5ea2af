#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "lpa/fixtures.hpp"
#include "lpa/graph.hpp"

using namespace lpa;

namespace {

using Mask = unsigned;

bool hereditary(const Graph& g, Mask s) {
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if ((s >> g.source(e) & 1) && !(s >> g.range(e) & 1)) return false;
  return true;
}

bool saturated(const Graph& g, Mask s) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if ((s >> v & 1) || !g.is_regular(v)) continue;
    bool all_in = true;
    for (EdgeId e : g.out_edges(v)) all_in = all_in && (s >> g.range(e) & 1);
    if (all_in) return false;
  }
  return true;
}

// smallest hereditary saturated superset, by scanning every subset
Mask brute_closure(const Graph& g, Mask h) {
  const Mask full = (1u << g.num_vertices()) - 1;
  Mask best = full;
  for (Mask s = 0; s <= full; ++s)
    if ((s & h) == h && hereditary(g, s) && saturated(g, s) && __builtin_popcount(s) < __builtin_popcount(best))
      best = s;
  return best;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (VertexId v : s) m |= 1u << v;
  return m;
}

VertexSet from_mask(Mask m, std::size_t n) {
  VertexSet out;
  for (VertexId v = 0; v < n; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

// closed edge sequences with distinct sources, as sets of rotations
std::set<std::vector<EdgeId>> brute_cycles(const Graph& g) {
  std::set<std::vector<EdgeId>> out;
  std::vector<EdgeId> seq;
  std::function<void(VertexId, VertexId, Mask)> walk = [&](VertexId start, VertexId at, Mask seen) {
    for (EdgeId e : g.out_edges(at)) {
      seq.push_back(e);
      VertexId r = g.range(e);
      if (r == start) {
        auto best = seq;
        for (std::size_t i = 1; i < seq.size(); ++i) {
          std::vector<EdgeId> rot(seq.begin() + i, seq.end());
          rot.insert(rot.end(), seq.begin(), seq.begin() + i);
          best = std::min(best, rot);
        }
        out.insert(best);
      } else if (!(seen >> r & 1)) {
        walk(start, r, seen | 1u << r);
      }
      seq.pop_back();
    }
  };
  for (VertexId v = 0; v < g.num_vertices(); ++v) walk(v, v, 1u << v);
  return out;
}

bool brute_simple(const Graph& g) {
  const Mask full = (1u << g.num_vertices()) - 1;
  for (Mask s = 1; s < full; ++s)
    if (hereditary(g, s) && saturated(g, s)) return false;
  for (const auto& c : brute_cycles(g)) {
    for (EdgeId e : c) {
      VertexId v = g.source(e);
      for (EdgeId f : g.out_edges(v))
        if (f != e) goto has_exit;
    }
    return false;
  has_exit:;
  }
  return true;
}

Graph random_graph(std::mt19937_64& rng, unsigned max_vertices, unsigned max_edges) {
  Graph g;
  unsigned n = std::uniform_int_distribution<unsigned>(1, max_vertices)(rng);
  for (unsigned i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  unsigned m = std::uniform_int_distribution<unsigned>(0, max_edges)(rng);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  for (unsigned i = 0; i < m; ++i) g.add_edge("e" + std::to_string(i), pick(rng), pick(rng));
  return g;
}

}  // namespace

TEST(GraphParse, RoseWithTwoPetals) {
  Graph g = Graph::parse("vertex v\nedge e v v\nedge f v v");
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.source(1), 0u);
  EXPECT_EQ(g.range(1), 0u);
}

TEST(GraphParse, DuplicateEdgeIdIsRejected) {
  EXPECT_THROW(Graph::parse("vertex v1\nvertex v2\nedge e1 v1 v2\nedge e1 v2 v1"), GraphError);
}

TEST(GraphParse, UnknownEndpointIsReported) {
  try {
    Graph::parse("edge e a b");
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown endpoint `a`"), std::string::npos) << e.what();
  }
}

TEST(GraphParse, CommentsBlankLinesAndBadIdentifiers) {
  Graph g = Graph::parse("# header\n\nvertex v\n  # indented comment\nedge e v v\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_THROW(Graph::parse("vertex 1v"), GraphError);
  EXPECT_THROW(Graph::parse("vertex v\nvertex v"), GraphError);
  EXPECT_THROW(Graph::parse("vertex v\nedge v v v"), GraphError);
  EXPECT_THROW(Graph::parse("node v"), GraphError);
  EXPECT_THROW(Graph::parse("vertex v w"), GraphError);
}

TEST(GraphParse, TextRoundTrip) {
  for (const auto& [name, g] : fixtures::standard_set()) {
    Graph h = Graph::parse(g.to_text());
    EXPECT_EQ(h.to_text(), g.to_text()) << name;
  }
}

TEST(Identifiers, Grammar) {
  EXPECT_TRUE(is_identifier("v"));
  EXPECT_TRUE(is_identifier("e_1"));
  EXPECT_FALSE(is_identifier("_e"));
  EXPECT_FALSE(is_identifier("1e"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("e*"));
}

TEST(RegularVertices, Examples) {
  EXPECT_EQ(regular_vertices(fixtures::line(3)), (VertexSet{0, 1}));
  EXPECT_EQ(regular_vertices(fixtures::rose(1)), (VertexSet{0}));
  EXPECT_TRUE(regular_vertices(fixtures::two_isolated()).empty());
}

TEST(Cycles, Examples) {
  EXPECT_TRUE(cycles(fixtures::line(3)).empty());
  Graph r2 = fixtures::rose(2);
  auto c = cycles(r2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(format_edges(r2, c[0].edges), "[e]");
  EXPECT_EQ(format_edges(r2, c[1].edges), "[f]");
  Graph c2 = fixtures::two_cycle();
  auto cc = cycles(c2);
  ASSERT_EQ(cc.size(), 1u);
  EXPECT_EQ(format_edges(c2, cc[0].edges), "[e f]");
}

TEST(Cycles, ExitExamples) {
  Graph r1 = fixtures::rose(1);
  EXPECT_FALSE(cycle_has_exit(r1, cycles(r1)[0]));
  Graph r2 = fixtures::rose(2);
  EXPECT_TRUE(cycle_has_exit(r2, cycles(r2)[0]));
  Graph g = fixtures::two_cycle();
  g.add_vertex("x");
  g.add_edge("h", "w", "x");
  EXPECT_TRUE(cycle_has_exit(g, cycles(g)[0]));
}

TEST(Cycles, MatchExhaustiveEnumeration) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng, 4, 6);
    std::set<std::vector<EdgeId>> got;
    for (const auto& c : cycles(g)) got.insert(c.edges);
    EXPECT_EQ(got, brute_cycles(g)) << g.to_text();
  }
}

TEST(Cycles, AcyclicIffTopologicalOrderExists) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng, 5, 7);
    std::vector<int> indeg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) ++indeg[g.range(e)];
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
      VertexId v = ready.back();
      ready.pop_back();
      ++removed;
      for (EdgeId e : g.out_edges(v))
        if (--indeg[g.range(e)] == 0) ready.push_back(g.range(e));
    }
    EXPECT_EQ(cycles(g).empty(), removed == g.num_vertices()) << g.to_text();
  }
}

TEST(Closure, Examples) {
  Graph a3 = fixtures::line(3);
  VertexId v1 = 0, v3 = 2;
  EXPECT_EQ(hereditary_saturated_closure(a3, std::vector<VertexId>{v3}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(hereditary_saturated_closure(a3, std::vector<VertexId>{v1}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(hereditary_saturated_closure(fixtures::two_isolated(), std::vector<VertexId>{0}), (VertexSet{0}));
}

TEST(Closure, MatchesSubsetScanAndIsAClosureOperator) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(rng, 5, 7);
    const Mask full = (1u << g.num_vertices()) - 1;
    for (Mask h = 0; h <= full; ++h) {
      Mask c = to_mask(hereditary_saturated_closure(g, from_mask(h, g.num_vertices())));
      ASSERT_EQ(c, brute_closure(g, h)) << g.to_text() << " h=" << h;
      EXPECT_EQ(c & h, h);
      EXPECT_EQ(to_mask(hereditary_saturated_closure(g, from_mask(c, g.num_vertices()))), c);
      for (Mask k = h; k <= full; k = (k + 1) | h) {
        Mask ck = to_mask(hereditary_saturated_closure(g, from_mask(k, g.num_vertices())));
        EXPECT_EQ(c & ck, c);
        if (k == full) break;
      }
    }
  }
}

TEST(Simplicity, Examples) {
  auto r1 = is_simple_lpa(fixtures::rose(1));
  EXPECT_FALSE(r1.simple);
  EXPECT_EQ(r1.reason, "cycle [e] has no exit");
  EXPECT_TRUE(is_simple_lpa(fixtures::rose(2)).simple);
  EXPECT_TRUE(is_simple_lpa(fixtures::line(4)).simple);
  EXPECT_FALSE(is_simple_lpa(fixtures::two_isolated()).simple);
}

TEST(Simplicity, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_graph(rng, 4, 6);
    EXPECT_EQ(is_simple_lpa(g).simple, brute_simple(g)) << g.to_text();
  }
}

TEST(Simplicity, InvariantUnderRelabelling) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 5, 7);
    std::vector<VertexId> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    for (VertexId v = 0; v < g.num_vertices(); ++v) h.add_vertex("u" + std::to_string(v));
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (EdgeId e : order) h.add_edge("d" + std::to_string(e), perm[g.source(e)], perm[g.range(e)]);
    EXPECT_EQ(is_simple_lpa(g).simple, is_simple_lpa(h).simple) << g.to_text();
    EXPECT_EQ(cycles(g).size(), cycles(h).size());
  }
}
