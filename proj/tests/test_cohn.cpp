#include <gtest/gtest.h>

#include <random>

#include "lpa/cohn.hpp"
#include "lpa/expression.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/random.hpp"

using namespace lpa;

namespace {

Element E(const Graph& g, FieldSpec f, const char* text) { return parse_element(g, f, text); }

// A word in real and ghost letters, reduced only with e* f = delta r(e).
struct Letter {
  EdgeId edge;
  bool ghost;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  VertexId left;
  VertexId right;
  std::vector<Letter> letters;
};

Word to_word(const Monomial& m) {
  Word w{m.real.source(), m.ghost.source(), {}};
  for (EdgeId e : m.real.edges()) w.letters.push_back({e, false});
  for (auto it = m.ghost.edges().rbegin(); it != m.ghost.edges().rend(); ++it) w.letters.push_back({*it, true});
  return w;
}

std::optional<Monomial> word_product(const Graph& g, const Monomial& a, const Monomial& b) {
  Word x = to_word(a);
  Word y = to_word(b);
  if (x.right != y.left) return std::nullopt;
  std::vector<Letter> stack;
  for (const auto& l : x.letters) stack.push_back(l);
  for (const auto& l : y.letters) {
    if (!l.ghost && !stack.empty() && stack.back().ghost) {
      if (stack.back().edge != l.edge) return std::nullopt;
      stack.pop_back();
      continue;
    }
    stack.push_back(l);
  }
  std::vector<EdgeId> real, ghost_rev;
  for (const auto& l : stack) (l.ghost ? ghost_rev : real).push_back(l.edge);
  std::vector<EdgeId> ghost(ghost_rev.rbegin(), ghost_rev.rend());
  Path r = real.empty() ? Path::trivial(x.left) : Path::from_edges(g, real);
  Path h = ghost.empty() ? Path::trivial(y.right) : Path::from_edges(g, ghost);
  return Monomial(r, h);
}

std::vector<Monomial> monomials_up_to(const Graph& g, std::size_t len) {
  std::vector<Monomial> out;
  auto paths = paths_up_to(g, len);
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (a.range() == b.range()) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST(MonomialProduct, Examples) {
  Graph r2 = fixtures::rose(2);
  FieldSpec q;
  EXPECT_EQ(mul(E(r2, q, "e*"), E(r2, q, "e")), E(r2, q, "v"));
  EXPECT_TRUE(mul(E(r2, q, "e*"), E(r2, q, "f")).is_zero());
  Graph a3 = fixtures::line(3);
  Monomial m1(Path::from_names(a3, {"e1"}), Path::trivial(1));
  Monomial m2(Path::from_names(a3, {"e2"}), Path::from_names(a3, {"e2"}));
  auto p = multiply(m1, m2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, Monomial(Path::from_names(a3, {"e1", "e2"}), Path::from_names(a3, {"e2"})));
}

TEST(MonomialProduct, AgreesWithWordReduction) {
  for (const auto& [name, g] : fixtures::standard_set()) {
    auto monos = monomials_up_to(g, name[0] == 'R' ? 2 : 3);
    for (const auto& a : monos)
      for (const auto& b : monos) ASSERT_EQ(multiply(a, b), word_product(g, a, b)) << name;
  }
}

TEST(Mul, Examples) {
  Graph r1 = fixtures::rose(1);
  FieldSpec q;
  EXPECT_TRUE(mul(E(r1, q, "e"), Element(q)).is_zero());
  EXPECT_EQ(mul(E(r1, q, "e + e*"), E(r1, q, "e + e*")), E(r1, q, "e e* + e e + e* e* + v"));
  Graph a3 = fixtures::line(3);
  Element x = E(a3, q, "e1 e2 + 3 e1 e1* - v1");
  EXPECT_EQ(mul(E(a3, q, "v1"), x), x);
}

TEST(Star, Examples) {
  Graph t = fixtures::ideal_audit_graph();
  FieldSpec q;
  EXPECT_EQ(star(E(t, q, "a")), E(t, q, "a*"));
  EXPECT_EQ(star(E(t, q, "2 a b* - w")), E(t, q, "2 b a* - w"));
}

TEST(Bracket, Examples) {
  Graph r1 = fixtures::rose(1);
  FieldSpec q;
  EXPECT_EQ(bracket(E(r1, q, "e"), E(r1, q, "e*")), E(r1, q, "e e* - v"));
  Element x = E(r1, q, "e e - 2 e*");
  EXPECT_TRUE(bracket(x, x).is_zero());
}

TEST(Involution, LawsOnRandomElements) {
  std::mt19937_64 rng(21);
  for (const auto& [name, g] : fixtures::standard_set())
    for (std::uint32_t p : {0u, 2u, 3u}) {
      FieldSpec f(p);
      for (int i = 0; i < 60; ++i) {
        Element x = random_element(g, f, rng);
        Element y = random_element(g, f, rng);
        Element z = random_element(g, f, rng);
        ASSERT_EQ(star(star(x)), x);
        ASSERT_EQ(star(mul(x, y)), mul(star(y), star(x)));
        ASSERT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
        ASSERT_EQ(bracket(x, y), -bracket(y, x));
        ASSERT_EQ(mul(x, y + z), mul(x, y) + mul(x, z));
      }
    }
}

TEST(SkewSymmetric, Examples) {
  Graph r1 = fixtures::rose(1);
  FieldSpec q;
  EXPECT_TRUE(is_skew_cohn(E(r1, q, "e - e*")));
  EXPECT_FALSE(is_skew_cohn(E(r1, q, "e + e*")));
  EXPECT_TRUE(is_symmetric_cohn(E(r1, q, "e + e*")));
  FieldSpec f2(2);
  EXPECT_TRUE(is_skew_cohn(E(r1, f2, "e e*")));
  EXPECT_FALSE(is_skew_cohn(E(r1, q, "e e*")));
}

TEST(CanonicalPairing, Examples) {
  Graph t = fixtures::ideal_audit_graph();
  FieldSpec q;
  auto p = canonical_pairing(E(t, q, "a b* - b a*"));
  ASSERT_EQ(p.pairs.size(), 1u);
  EXPECT_TRUE(p.diagonal.empty());
  EXPECT_EQ(p.pairs[0].forward, Scalar::one(q));
  EXPECT_EQ(p.pairs[0].backward, -Scalar::one(q));
  EXPECT_EQ(to_string(t, p.pairs[0].gamma), "a");
  EXPECT_EQ(to_string(t, p.pairs[0].lambda), "b");

  auto d = canonical_pairing(E(t, q, "w"));
  ASSERT_EQ(d.diagonal.size(), 1u);
  EXPECT_TRUE(d.diagonal[0].path.is_trivial());

  Element x = E(t, q, "2 a b* + 3 b a* + 5 c c*");
  auto m = canonical_pairing(x);
  ASSERT_EQ(m.pairs.size(), 1u);
  EXPECT_EQ(m.pairs[0].forward, from_integer(q, 2));
  EXPECT_EQ(m.pairs[0].backward, from_integer(q, 3));
  ASSERT_EQ(m.diagonal.size(), 1u);
  EXPECT_EQ(m.diagonal[0].coef, from_integer(q, 5));
  EXPECT_EQ(m.reconstruct(q), x);
}

TEST(DecomposeSkewCohn, Examples) {
  Graph t = fixtures::ideal_audit_graph();
  FieldSpec q;
  auto d = decompose_skew_cohn(E(t, q, "3 a b* - 3 b a*"));
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].coef, from_integer(q, 3));
  EXPECT_EQ(to_string(t, d.pairs[0].gamma), "a");
  EXPECT_EQ(to_string(t, d.pairs[0].lambda), "b");
  EXPECT_THROW(decompose_skew_cohn(E(t, q, "c c*")), NotSkewError);

  FieldSpec f2(2);
  Element x = E(t, f2, "w + a b* + b a*");
  auto d2 = decompose_skew_cohn(x);
  ASSERT_EQ(d2.diagonal.size(), 1u);
  EXPECT_EQ(to_string(t, d2.diagonal[0].path), "w");
  ASSERT_EQ(d2.pairs.size(), 1u);
  EXPECT_EQ(d2.reconstruct(f2), x);
}

TEST(DecomposeSkewCohn, RandomSkewElementsReconstruct) {
  std::mt19937_64 rng(22);
  for (const auto& [name, g] : fixtures::standard_set())
    for (std::uint32_t p : {0u, 2u, 3u}) {
      FieldSpec f(p);
      for (int i = 0; i < 40; ++i) {
        Element x = random_skew_element(g, f, rng);
        auto d = decompose_skew_cohn(x);
        ASSERT_EQ(d.reconstruct(f), x);
        if (p != 2) ASSERT_TRUE(d.diagonal.empty());
        Element y = random_element(g, f, rng);
        if (!is_skew_cohn(y)) ASSERT_THROW(decompose_skew_cohn(y), NotSkewError);
      }
    }
}

TEST(IdealGenerator, Examples) {
  FieldSpec q;
  Graph r2 = fixtures::rose(2);
  EXPECT_EQ(ideal_generator(r2, q, 0), E(r2, q, "v - e e* - f f*"));
  Graph a3 = fixtures::line(3);
  EXPECT_EQ(ideal_generator(a3, q, 0), E(a3, q, "v1 - e1 e1*"));
  EXPECT_THROW(ideal_generator(a3, q, 2), std::invalid_argument);
}

TEST(IdealGenerator, AnnihilatesNontrivialPaths) {
  FieldSpec q;
  for (const auto& [name, g] : fixtures::standard_set())
    for (VertexId v : regular_vertices(g)) {
      Element y = ideal_generator(g, q, v);
      for (const auto& p : paths_up_to(g, 4)) {
        if (p.is_trivial()) continue;
        Element pe = Element::monomial(q, Monomial(p, Path::trivial(p.range())));
        EXPECT_TRUE(mul(y, pe).is_zero()) << name;
        EXPECT_TRUE(mul(star(pe), y).is_zero()) << name;
      }
    }
}

TEST(Paths, CountOnRoseAndLine) {
  EXPECT_EQ(paths_up_to(fixtures::rose(2), 3).size(), 1u + 2 + 4 + 8);
  EXPECT_EQ(paths_up_to(fixtures::line(4), 5).size(), 4u + 3 + 2 + 1);
  EXPECT_THROW(Path::from_names(fixtures::line(3), {"e1", "e1"}), std::invalid_argument);
}
