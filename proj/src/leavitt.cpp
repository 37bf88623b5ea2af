#include "lpa/leavitt.hpp"

#include <iterator>

namespace lpa {

LeavittContext::LeavittContext(Graph g, FieldSpec f) : LeavittContext(std::move(g), f, {}) {}

LeavittContext::LeavittContext(Graph g, FieldSpec f, const std::map<VertexId, EdgeId>& special)
    : graph_(std::move(g)), field_(f), special_(graph_.num_vertices()) {
  for (const auto& [v, e] : special) {
    if (v >= graph_.num_vertices()) throw std::invalid_argument("special-edge map: unknown vertex");
    if (!graph_.is_regular(v))
      throw std::invalid_argument("special-edge map: `" + graph_.vertex_name(v) + "` is not regular");
    if (e >= graph_.num_edges() || graph_.source(e) != v)
      throw std::invalid_argument("special-edge map: edge for `" + graph_.vertex_name(v) +
                                  "` must leave that vertex");
    special_[v] = e;
  }
  for (VertexId v = 0; v < graph_.num_vertices(); ++v)
    if (!special_[v] && graph_.is_regular(v)) special_[v] = graph_.out_edges(v).front();
}

bool LeavittContext::is_reducible(const Monomial& m) const {
  if (m.real.is_trivial() || m.ghost.is_trivial()) return false;
  EdgeId a = m.real.edges().back();
  return a == m.ghost.edges().back() && is_special(a);
}

LeavittContext make_context(const Graph& g, FieldSpec f) { return LeavittContext(g, f); }

LeavittContext make_context(const Graph& g, FieldSpec f, const std::map<VertexId, EdgeId>& special) {
  return LeavittContext(g, f, special);
}

namespace {

// One rewriting step on a reducible monomial.
void expand(const LeavittContext& ctx, const Monomial& m, const Scalar& c,
            std::map<Monomial, Scalar>& work) {
  const Graph& g = ctx.graph();
  EdgeId special = m.real.edges().back();
  Path a = m.real.without_last(g);
  Path b = m.ghost.without_last(g);
  auto push = [&](Monomial mon, const Scalar& coef) {
    auto [it, inserted] = work.try_emplace(std::move(mon), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  push(Monomial(a, b), c);
  for (EdgeId f : g.out_edges(g.source(special))) {
    if (f == special) continue;
    Path fe = Path::edge(g, f);
    push(Monomial(a.concat(fe), b.concat(fe)), -c);
  }
}

template <class Pick>
Element reduce(const LeavittContext& ctx, const Element& x, Pick pick) {
  std::map<Monomial, Scalar> work(x.terms().begin(), x.terms().end());
  Element out(x.field());
  while (!work.empty()) {
    auto it = pick(work);
    Monomial m = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (ctx.is_reducible(m))
      expand(ctx, m, c, work);
    else
      out.add_term(m, c);
  }
  return out;
}

}  // namespace

Element normal_form(const LeavittContext& ctx, const Element& x) {
  return reduce(ctx, x, [](auto& work) { return work.begin(); });
}

Element normal_form_shuffled(const LeavittContext& ctx, const Element& x, std::mt19937_64& rng) {
  return reduce(ctx, x, [&rng](auto& work) {
    std::uniform_int_distribution<std::size_t> d(0, work.size() - 1);
    return std::next(work.begin(), static_cast<std::ptrdiff_t>(d(rng)));
  });
}

bool equals_lpa(const LeavittContext& ctx, const Element& x, const Element& y) {
  return normal_form(ctx, x - y).is_zero();
}

bool in_ideal_I(const LeavittContext& ctx, const Element& x) { return normal_form(ctx, x).is_zero(); }

bool is_skew_lpa(const LeavittContext& ctx, const Element& x) {
  return normal_form(ctx, x + star(x)).is_zero();
}

bool is_symmetric_lpa(const LeavittContext& ctx, const Element& x) {
  return normal_form(ctx, x - star(x)).is_zero();
}

SkewDecomposition decompose_skew_lpa(const LeavittContext& ctx, const Element& x) {
  // The irreducible basis is closed under the involution, so a skew class
  // has a skew normal form.
  Element nf = normal_form(ctx, x);
  if (!is_skew_cohn(nf)) throw NotSkewError("element is not skew-symmetric in the Leavitt path algebra");
  return skew_decomposition_of(nf);
}

std::vector<Monomial> irreducible_monomials(const LeavittContext& ctx, std::size_t max_len) {
  const Graph& g = ctx.graph();
  auto paths = paths_up_to(g, max_len);
  std::vector<std::vector<const Path*>> by_range(g.num_vertices());
  for (const auto& p : paths) by_range[p.range()].push_back(&p);
  std::vector<Monomial> out;
  for (const auto& group : by_range)
    for (const Path* a : group)
      for (const Path* b : group) {
        if (a->length() + b->length() > max_len) continue;
        Monomial m(*a, *b);
        if (!ctx.is_reducible(m)) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Monomial>> enumerate_lpa_basis(const LeavittContext& ctx) {
  const Graph& g = ctx.graph();
  if (!cycles(g).empty()) return std::nullopt;
  // Acyclic: no path is longer than the number of vertices minus one.
  std::size_t longest = g.num_vertices() == 0 ? 0 : g.num_vertices() - 1;
  return irreducible_monomials(ctx, 2 * longest);
}

}  // namespace lpa
