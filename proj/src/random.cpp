#include "lpa/random.hpp"

namespace lpa {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Walks backwards from `end`: the result is a path ending at `end`.
Path random_path_into(const Graph& g, std::mt19937_64& rng, VertexId end, std::size_t max_len) {
  std::size_t len = uniform(rng, 0, max_len);
  std::vector<EdgeId> rev;
  VertexId at = end;
  while (rev.size() < len && !g.in_edges(at).empty()) {
    auto ins = g.in_edges(at);
    EdgeId e = ins[uniform(rng, 0, ins.size() - 1)];
    rev.push_back(e);
    at = g.source(e);
  }
  if (rev.empty()) return Path::trivial(end);
  return Path::from_edges(g, std::vector<EdgeId>(rev.rbegin(), rev.rend()));
}

}  // namespace

Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
  for (;;) {
    long num = static_cast<long>(uniform(rng, 0, 10)) - 5;
    long den = f.is_rational() ? static_cast<long>(uniform(rng, 1, 3)) : 1;
    Scalar s(f, mpz_class(num), mpz_class(den));
    if (!s.is_zero()) return s;
  }
}

Path random_path(const Graph& g, std::mt19937_64& rng, std::size_t max_len) {
  VertexId v = static_cast<VertexId>(uniform(rng, 0, g.num_vertices() - 1));
  std::size_t len = uniform(rng, 0, max_len);
  std::vector<EdgeId> edges;
  VertexId at = v;
  while (edges.size() < len && !g.out_edges(at).empty()) {
    auto outs = g.out_edges(at);
    EdgeId e = outs[uniform(rng, 0, outs.size() - 1)];
    edges.push_back(e);
    at = g.range(e);
  }
  if (edges.empty()) return Path::trivial(v);
  return Path::from_edges(g, std::move(edges));
}

Monomial random_monomial(const Graph& g, std::mt19937_64& rng, std::size_t max_len) {
  Path real = random_path(g, rng, max_len);
  Path ghost = random_path_into(g, rng, real.range(), max_len);
  return {std::move(real), std::move(ghost)};
}

Element random_element(const Graph& g, FieldSpec f, std::mt19937_64& rng, RandomShape shape) {
  Element x(f);
  std::size_t n = uniform(rng, 1, shape.max_support);
  for (std::size_t i = 0; i < n; ++i)
    x.add_term(random_monomial(g, rng, shape.max_path_len), random_scalar(f, rng));
  return x;
}

Element random_skew_element(const Graph& g, FieldSpec f, std::mt19937_64& rng, RandomShape shape) {
  Element y = random_element(g, f, rng, shape);
  Element x = y - star(y);
  if (f.has_char_two()) {
    std::size_t n = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < n; ++i)
      x.add_term(Monomial::diagonal(random_path(g, rng, shape.max_path_len)), random_scalar(f, rng));
  }
  return x;
}

}  // namespace lpa
