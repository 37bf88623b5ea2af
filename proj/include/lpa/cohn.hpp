#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// A finite path: trivial at a vertex, or a chained nonempty edge sequence.
class Path {
 public:
  static Path trivial(VertexId v) { return Path(v, v, {}); }
  static Path edge(const Graph& g, EdgeId e) { return Path(g.source(e), g.range(e), {e}); }
  /// Throws std::invalid_argument unless the edges chain.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);
  /// Looks up edge names; throws std::invalid_argument on unknown names.
  static Path from_names(const Graph& g, const std::vector<std::string>& names);

  VertexId source() const { return source_; }
  VertexId range() const { return range_; }
  std::size_t length() const { return edges_.size(); }
  bool is_trivial() const { return edges_.empty(); }
  bool is_closed() const { return source_ == range_; }
  const std::vector<EdgeId>& edges() const { return edges_; }

  /// Same source, and this path's edges begin with `prefix`'s edges.
  bool has_prefix(const Path& prefix) const;
  /// The path following `prefix`; requires has_prefix(prefix).
  Path after_prefix(const Path& prefix) const;
  /// this followed by `tail`; requires range() == tail.source().
  Path concat(const Path& tail) const;
  /// Drops the last edge; requires !is_trivial().
  Path without_last(const Graph& g) const;

  /// Canonical order: length, then edge ids lexicographically, then source.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  Path(VertexId s, VertexId r, std::vector<EdgeId> e)
      : source_(s), range_(r), edges_(std::move(e)) {}

  VertexId source_ = 0;
  VertexId range_ = 0;
  std::vector<EdgeId> edges_;
};

/// The basis element real * ghost^*, with r(real) = r(ghost).
struct Monomial {
  Path real;
  Path ghost;

  Monomial(Path r, Path g);

  static Monomial vertex(VertexId v) { return {Path::trivial(v), Path::trivial(v)}; }
  static Monomial edge(const Graph& g, EdgeId e) {
    return {Path::edge(g, e), Path::trivial(g.range(e))};
  }
  static Monomial ghost_edge(const Graph& g, EdgeId e) {
    return {Path::trivial(g.range(e)), Path::edge(g, e)};
  }
  /// p p^*
  static Monomial diagonal(const Path& p) { return {p, p}; }

  std::size_t total_length() const { return real.length() + ghost.length(); }
  bool is_diagonal() const { return real == ghost; }
  /// Left and right vertex idempotents: s(real) and s(ghost).
  VertexId left_vertex() const { return real.source(); }
  VertexId right_vertex() const { return ghost.source(); }
  Monomial star() const { return {ghost, real}; }

  /// Canonical order: total length, then real path, then ghost path.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Product in the Cohn path algebra: either zero or a single basis monomial
/// with coefficient 1.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

/// Finitely supported combination of basis monomials; this is the unique
/// expansion in the Cohn basis. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Element(FieldSpec field = FieldSpec()) : field_(field) {}
  static Element monomial(FieldSpec field, const Monomial& m);
  static Element monomial(const Monomial& m, const Scalar& coef);

  FieldSpec field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds coef * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& coef);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  FieldSpec field_;
  Terms terms_;
};

Element vertex_element(const Graph& g, FieldSpec f, VertexId v);
Element edge_element(const Graph& g, FieldSpec f, EdgeId e);
Element ghost_element(const Graph& g, FieldSpec f, EdgeId e);

Element mul(const Element& x, const Element& y);
/// The standard involution: swaps real and ghost parts, fixes scalars.
Element star(const Element& x);
/// xy - yx
Element bracket(const Element& x, const Element& y);

bool is_skew_cohn(const Element& x);
bool is_symmetric_cohn(const Element& x);

/// v - sum over s(e) = v of e e^*. Throws std::invalid_argument unless v is
/// regular.
Element ideal_generator(const Graph& g, FieldSpec f, VertexId v);

/// Support regrouped by unordered {real, ghost} pair.
struct PairedForm {
  struct Pair {
    Scalar forward;   ///< coefficient of gamma lambda^*
    Scalar backward;  ///< coefficient of lambda gamma^*
    Path gamma;       ///< gamma < lambda in canonical order
    Path lambda;
  };
  struct Diagonal {
    Scalar coef;
    Path path;
  };
  std::vector<Pair> pairs;
  std::vector<Diagonal> diagonal;

  Element reconstruct(FieldSpec f) const;
};

PairedForm canonical_pairing(const Element& x);

class NotSkewError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// x = sum coef (gamma lambda^* - lambda gamma^*) + sum coef p p^*.
/// The diagonal list is empty outside characteristic 2.
struct SkewDecomposition {
  struct Pair {
    Scalar coef;
    Path gamma;
    Path lambda;
  };
  std::vector<Pair> pairs;
  std::vector<PairedForm::Diagonal> diagonal;

  Element reconstruct(FieldSpec f) const;
};

/// Throws NotSkewError unless x^* = -x in the Cohn algebra.
SkewDecomposition decompose_skew_cohn(const Element& x);

/// Reads the skew decomposition off a skew element's support; shared by the
/// Cohn and Leavitt deciders.
SkewDecomposition skew_decomposition_of(const Element& x);

/// Every path of length <= max_len, in canonical order.
std::vector<Path> paths_up_to(const Graph& g, std::size_t max_len);

}  // namespace lpa
