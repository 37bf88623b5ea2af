#include "lpa/cohn.hpp"

#include <algorithm>

namespace lpa {

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw std::invalid_argument("from_edges needs at least one edge");
  for (EdgeId e : edges)
    if (e >= g.num_edges()) throw std::invalid_argument("unknown edge id");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1]))
      throw std::invalid_argument("edges `" + g.edge_name(edges[i]) + "` and `" +
                                  g.edge_name(edges[i + 1]) + "` do not chain");
  }
  VertexId s = g.source(edges.front());
  VertexId r = g.range(edges.back());
  return Path(s, r, std::move(edges));
}

Path Path::from_names(const Graph& g, const std::vector<std::string>& names) {
  std::vector<EdgeId> ids;
  for (const auto& n : names) {
    auto e = g.find_edge(n);
    if (!e) throw std::invalid_argument("unknown edge `" + n + "`");
    ids.push_back(*e);
  }
  return from_edges(g, std::move(ids));
}

bool Path::has_prefix(const Path& prefix) const {
  if (source_ != prefix.source_ || prefix.edges_.size() > edges_.size()) return false;
  return std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin());
}

Path Path::after_prefix(const Path& prefix) const {
  std::vector<EdgeId> rest(edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                           edges_.end());
  return Path(prefix.range_, range_, std::move(rest));
}

Path Path::concat(const Path& tail) const {
  if (range_ != tail.source_) throw std::invalid_argument("paths do not chain");
  std::vector<EdgeId> e = edges_;
  e.insert(e.end(), tail.edges_.begin(), tail.edges_.end());
  return Path(source_, tail.range_, std::move(e));
}

Path Path::without_last(const Graph& g) const {
  std::vector<EdgeId> e(edges_.begin(), edges_.end() - 1);
  return Path(source_, g.source(edges_.back()), std::move(e));
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
  if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
  return a.source_ <=> b.source_;
}

Monomial::Monomial(Path r, Path g) : real(std::move(r)), ghost(std::move(g)) {
  if (real.range() != ghost.range())
    throw std::invalid_argument("monomial real and ghost paths must share a range");
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_length() <=> b.total_length(); c != 0) return c;
  if (auto c = a.real <=> b.real; c != 0) return c;
  return a.ghost <=> b.ghost;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  // a.ghost^* b.real collapses by (CK1) to a path or its ghost, or to zero.
  if (b.real.has_prefix(a.ghost)) return Monomial(a.real.concat(b.real.after_prefix(a.ghost)), b.ghost);
  if (a.ghost.has_prefix(b.real)) return Monomial(a.real, b.ghost.concat(a.ghost.after_prefix(b.real)));
  return std::nullopt;
}

Element Element::monomial(FieldSpec field, const Monomial& m) {
  return monomial(m, Scalar::one(field));
}

Element Element::monomial(const Monomial& m, const Scalar& coef) {
  Element x(coef.field());
  x.add_term(m, coef);
  return x;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("elements over different fields");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("elements over different fields");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element vertex_element(const Graph& g, FieldSpec f, VertexId v) {
  if (v >= g.num_vertices()) throw std::invalid_argument("unknown vertex id");
  return Element::monomial(f, Monomial::vertex(v));
}

Element edge_element(const Graph& g, FieldSpec f, EdgeId e) {
  return Element::monomial(f, Monomial::edge(g, e));
}

Element ghost_element(const Graph& g, FieldSpec f, EdgeId e) {
  return Element::monomial(f, Monomial::ghost_edge(g, e));
}

Element mul(const Element& x, const Element& y) {
  if (!(x.field() == y.field())) throw std::invalid_argument("elements over different fields");
  Element out(x.field());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (auto m = multiply(a, b)) out.add_term(*m, ca * cb);
  return out;
}

Element star(const Element& x) {
  Element out(x.field());
  for (const auto& [m, c] : x.terms()) out.add_term(m.star(), c);
  return out;
}

Element bracket(const Element& x, const Element& y) { return mul(x, y) - mul(y, x); }

bool is_skew_cohn(const Element& x) { return (x + star(x)).is_zero(); }
bool is_symmetric_cohn(const Element& x) { return (x - star(x)).is_zero(); }

Element ideal_generator(const Graph& g, FieldSpec f, VertexId v) {
  if (v >= g.num_vertices()) throw std::invalid_argument("unknown vertex id");
  if (!g.is_regular(v))
    throw std::invalid_argument("vertex `" + g.vertex_name(v) + "` is not regular");
  Element y = vertex_element(g, f, v);
  for (EdgeId e : g.out_edges(v)) y.add_term(Monomial::diagonal(Path::edge(g, e)), -Scalar::one(f));
  return y;
}

Element PairedForm::reconstruct(FieldSpec f) const {
  Element x(f);
  for (const auto& p : pairs) {
    x.add_term(Monomial(p.gamma, p.lambda), p.forward);
    x.add_term(Monomial(p.lambda, p.gamma), p.backward);
  }
  for (const auto& d : diagonal) x.add_term(Monomial::diagonal(d.path), d.coef);
  return x;
}

PairedForm canonical_pairing(const Element& x) {
  PairedForm out;
  const auto zero = Scalar::zero(x.field());
  for (const auto& [m, c] : x.terms()) {
    if (m.is_diagonal()) {
      out.diagonal.push_back({c, m.real});
    } else if (m.real < m.ghost) {
      out.pairs.push_back({c, x.coefficient(m.star()), m.real, m.ghost});
    } else if (x.coefficient(m.star()).is_zero()) {
      // the partner gamma lambda^* is absent, so this pair is not visited above
      out.pairs.push_back({zero, c, m.ghost, m.real});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.gamma, a.lambda) < std::tie(b.gamma, b.lambda);
  });
  return out;
}

Element SkewDecomposition::reconstruct(FieldSpec f) const {
  Element x(f);
  for (const auto& p : pairs) {
    x.add_term(Monomial(p.gamma, p.lambda), p.coef);
    x.add_term(Monomial(p.lambda, p.gamma), -p.coef);
  }
  for (const auto& d : diagonal) x.add_term(Monomial::diagonal(d.path), d.coef);
  return x;
}

SkewDecomposition skew_decomposition_of(const Element& x) {
  SkewDecomposition out;
  auto paired = canonical_pairing(x);
  for (const auto& p : paired.pairs) out.pairs.push_back({p.forward, p.gamma, p.lambda});
  out.diagonal = std::move(paired.diagonal);
  return out;
}

SkewDecomposition decompose_skew_cohn(const Element& x) {
  if (!is_skew_cohn(x)) throw NotSkewError("element is not skew-symmetric");
  return skew_decomposition_of(x);
}

std::vector<Path> paths_up_to(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(Path::trivial(v));
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (EdgeId e : g.out_edges(out[i].range())) out.push_back(out[i].concat(Path::edge(g, e)));
    }
    layer_begin = layer_end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpa
