#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lpa/cohn.hpp"

namespace lpa {

/// Fixes the canonical basis of the Leavitt path algebra: one special
/// outgoing edge per regular vertex. A monomial is reducible when its real
/// and ghost paths both end in the same special edge.
class LeavittContext {
 public:
  /// Picks the first declared outgoing edge of each regular vertex.
  LeavittContext(Graph g, FieldSpec f);
  /// Uses `special` for the listed vertices and the default elsewhere.
  /// Throws std::invalid_argument if an entry names a non-regular vertex or
  /// an edge with another source.
  LeavittContext(Graph g, FieldSpec f, const std::map<VertexId, EdgeId>& special);

  const Graph& graph() const { return graph_; }
  FieldSpec field() const { return field_; }
  /// Special edge of a regular vertex; nullopt for sinks.
  std::optional<EdgeId> special_edge(VertexId v) const { return special_.at(v); }
  bool is_special(EdgeId e) const { return special_.at(graph_.source(e)) == e; }

  bool is_reducible(const Monomial& m) const;

 private:
  Graph graph_;
  FieldSpec field_;
  std::vector<std::optional<EdgeId>> special_;
};

LeavittContext make_context(const Graph& g, FieldSpec f);
LeavittContext make_context(const Graph& g, FieldSpec f, const std::map<VertexId, EdgeId>& special);

/// Canonical representative of x modulo the ideal generated by the (CK2)
/// differences. Reducible monomials a e e^* b^* are rewritten to
/// a b^* - sum over the other edges f leaving s(e) of a f f^* b^*.
Element normal_form(const LeavittContext& ctx, const Element& x);

/// Same result, processing the worklist in an order drawn from `rng`.
Element normal_form_shuffled(const LeavittContext& ctx, const Element& x, std::mt19937_64& rng);

bool equals_lpa(const LeavittContext& ctx, const Element& x, const Element& y);
bool in_ideal_I(const LeavittContext& ctx, const Element& x);
bool is_skew_lpa(const LeavittContext& ctx, const Element& x);
bool is_symmetric_lpa(const LeavittContext& ctx, const Element& x);

/// Skew decomposition of normal_form(x). Throws NotSkewError.
SkewDecomposition decompose_skew_lpa(const LeavittContext& ctx, const Element& x);

/// Irreducible monomials with total length <= max_len, canonical order.
std::vector<Monomial> irreducible_monomials(const LeavittContext& ctx, std::size_t max_len);

/// The whole canonical basis when the graph is acyclic; nullopt when a
/// cycle makes it infinite.
std::optional<std::vector<Monomial>> enumerate_lpa_basis(const LeavittContext& ctx);

}  // namespace lpa
