#include "lpa/lie.hpp"

#include <sstream>

#include "lpa/expression.hpp"

namespace lpa {

Scalar VertexVector::at(VertexId v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void VertexVector::add(VertexId v, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

VertexVector& VertexVector::operator+=(const VertexVector& o) {
  for (const auto& [v, c] : o.entries_) add(v, c);
  return *this;
}

VertexVector& VertexVector::operator*=(const Scalar& s) {
  if (s.is_zero()) entries_.clear();
  for (auto& [v, c] : entries_) c *= s;
  return *this;
}

IntegerVertexVector b_vector(const Graph& g, VertexId v) {
  if (v >= g.num_vertices()) throw std::invalid_argument("unknown vertex id");
  IntegerVertexVector out;
  if (!g.is_regular(v)) return out;
  for (EdgeId e : g.out_edges(v)) ++out[g.range(e)];
  if (--out[v] == 0) out.erase(v);
  return out;
}

std::vector<IntegerVertexVector> b_vectors(const Graph& g) {
  std::vector<IntegerVertexVector> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(b_vector(g, v));
  return out;
}

VertexVector to_field(FieldSpec f, const IntegerVertexVector& v) {
  VertexVector out(f);
  for (const auto& [u, n] : v) out.add(u, from_integer(f, n));
  return out;
}

std::optional<std::vector<Scalar>> span_certificate(FieldSpec f,
                                                    std::span<const IntegerVertexVector> basis,
                                                    const VertexVector& target) {
  // Rows are coordinates, columns are basis vectors, last column the target.
  VertexId dim = 0;
  for (const auto& b : basis)
    if (!b.empty()) dim = std::max(dim, b.rbegin()->first + 1);
  if (!target.is_zero()) dim = std::max(dim, target.entries().rbegin()->first + 1);
  const std::size_t cols = basis.size();
  std::vector<std::vector<Scalar>> a(dim, std::vector<Scalar>(cols + 1, Scalar::zero(f)));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [u, n] : basis[j]) a[u][j] = from_integer(f, n);
  for (const auto& [u, c] : target.entries()) a[u][cols] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < dim; ++col) {
    std::size_t pr = row;
    while (pr < dim && a[pr][col].is_zero()) ++pr;
    if (pr == dim) continue;
    std::swap(a[pr], a[row]);
    Scalar inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t k = col; k <= cols; ++k) a[r][k] -= factor * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < dim; ++r)
    if (!a[r][cols].is_zero()) return std::nullopt;
  std::vector<Scalar> coef(cols, Scalar::zero(f));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) coef[pivot_col[r]] = a[r][cols];
  return coef;
}

bool in_span(FieldSpec f, std::span<const IntegerVertexVector> basis, const VertexVector& target) {
  return span_certificate(f, basis, target).has_value();
}

RotationClass rotation_canonical(const Graph& g, const Path& closed) {
  if (closed.is_trivial()) throw std::invalid_argument("rotation class of a trivial path");
  if (!closed.is_closed()) throw std::invalid_argument("rotation class of a path that is not closed");
  const auto& e = closed.edges();
  const std::size_t n = e.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      EdgeId a = e[(k + i) % n];
      EdgeId b = e[(best + i) % n];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  std::vector<EdgeId> rot;
  rot.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rot.push_back(e[(best + i) % n]);
  return {Path::from_edges(g, std::move(rot))};
}

Element CommutatorDecomposition::reconstruct(FieldSpec f) const {
  Element x(f);
  for (const auto& d : pp) x.add_term(Monomial::diagonal(d.path), d.coef);
  for (const auto& o : qt) x.add_term(Monomial(o.q, o.t), o.coef);
  for (const auto& [cls, terms] : xyx)
    for (const auto& c : terms) x.add_term(Monomial(c.outer.concat(c.loop), c.outer), c.coef);
  for (const auto& [cls, terms] : zwz)
    for (const auto& c : terms) x.add_term(Monomial(c.outer, c.outer.concat(c.loop)), c.coef);
  return x;
}

CommutatorDecomposition classify(const LeavittContext& ctx, const Element& x) {
  const Graph& g = ctx.graph();
  CommutatorDecomposition out;
  const Element n = normal_form(ctx, x);
  for (const auto& [m, c] : n.terms()) {
    if (m.real == m.ghost) {
      out.pp.push_back({c, m.real});
    } else if (m.real.has_prefix(m.ghost)) {
      Path loop = m.real.after_prefix(m.ghost);
      if (!loop.is_closed()) throw std::logic_error("suffix of a same-range monomial is not closed");
      out.xyx[rotation_canonical(g, loop)].push_back({c, m.ghost, std::move(loop)});
    } else if (m.ghost.has_prefix(m.real)) {
      Path loop = m.ghost.after_prefix(m.real);
      if (!loop.is_closed()) throw std::logic_error("suffix of a same-range monomial is not closed");
      out.zwz[rotation_canonical(g, loop)].push_back({c, m.real, std::move(loop)});
    } else {
      out.qt.push_back({c, m.real, m.ghost});
    }
  }
  return out;
}

namespace {

std::vector<ClassSum> class_sums(FieldSpec f,
                                 const std::map<RotationClass, std::vector<CommutatorDecomposition::Conjugate>>& by_class) {
  std::vector<ClassSum> out;
  for (const auto& [cls, terms] : by_class) {
    Scalar s = Scalar::zero(f);
    for (const auto& t : terms) s += t.coef;
    out.push_back({cls, s});
  }
  return out;
}

}  // namespace

CommutatorReport in_commutator(const LeavittContext& ctx, const Element& x) {
  const Graph& g = ctx.graph();
  const FieldSpec f = ctx.field();
  auto d = classify(ctx, x);
  CommutatorReport r;
  r.diagonal_vector = VertexVector(f);
  for (const auto& p : d.pp) r.diagonal_vector.add(p.path.range(), p.coef);
  auto basis = b_vectors(g);
  r.diagonal_in_span = in_span(f, basis, r.diagonal_vector);
  r.xyx_sums = class_sums(f, d.xyx);
  r.zwz_sums = class_sums(f, d.zwz);

  if (!r.diagonal_in_span) r.first_failure = "cond1";
  for (const auto& s : r.xyx_sums)
    if (r.first_failure.empty() && !s.sum.is_zero()) r.first_failure = "cond2 class=" + format_class(g, s.cls);
  for (const auto& s : r.zwz_sums)
    if (r.first_failure.empty() && !s.sum.is_zero()) r.first_failure = "cond3 class=" + format_class(g, s.cls);
  r.member = r.first_failure.empty();
  return r;
}

std::string CommutatorReport::format(const Graph& g) const {
  std::ostringstream os;
  os << "in-commutator: " << (member ? "true" : "false") << '\n';
  os << "cond1: vector=" << format_vector(g, diagonal_vector)
     << " in_span=" << (diagonal_in_span ? "true" : "false") << '\n';
  auto list = [&](const char* name, const std::vector<ClassSum>& sums) {
    if (sums.empty()) os << name << ": no classes\n";
    for (const auto& s : sums) os << name << ": class=" << format_class(g, s.cls) << " sum=" << s.sum << '\n';
  };
  list("cond2", xyx_sums);
  list("cond3", zwz_sums);
  if (!member) os << "failed: " << first_failure << '\n';
  return os.str();
}

bool in_skew_cap_commutator(const LeavittContext& ctx, const Element& x) {
  return is_skew_lpa(ctx, x) && in_commutator(ctx, x).member;
}

Element SkewCommutatorForm::reconstruct(FieldSpec f) const {
  Element x(f);
  for (const auto& d : pp) x.add_term(Monomial::diagonal(d.path), d.coef);
  for (const auto& o : qt) {
    x.add_term(Monomial(o.q, o.t), o.coef);
    x.add_term(Monomial(o.t, o.q), -o.coef);
  }
  for (const auto& [cls, terms] : conjugates)
    for (const auto& c : terms) {
      Path long_path = c.outer.concat(c.loop);
      x.add_term(Monomial(c.outer, long_path), c.coef);
      x.add_term(Monomial(long_path, c.outer), -c.coef);
    }
  return x;
}

SkewCommutatorForm decompose_skew_commutator(const LeavittContext& ctx, const Element& x) {
  const FieldSpec f = ctx.field();
  if (!is_skew_lpa(ctx, x)) throw PreconditionError("element is not skew-symmetric");
  auto report = in_commutator(ctx, x);
  if (!report.member) throw PreconditionError("element is not in the commutator subspace (" + report.first_failure + ")");

  auto d = classify(ctx, x);
  SkewCommutatorForm out;
  out.pp = d.pp;
  for (const auto& o : d.qt)
    if (o.q < o.t) out.qt.push_back(o);
  out.conjugates = d.zwz;
  out.class_sums = report.xyx_sums;
  auto basis = b_vectors(ctx.graph());
  out.span_certificate = *span_certificate(f, basis, report.diagonal_vector);
  return out;
}

WitnessResult witness_herstein(const LeavittContext& ctx) {
  const Graph& g = ctx.graph();
  const FieldSpec f = ctx.field();
  auto verify = [&](Element x, std::string route) -> std::optional<HersteinWitness> {
    HersteinWitness w{std::move(x), std::move(route), false, {}};
    w.skew = is_skew_lpa(ctx, w.element);
    w.report = in_commutator(ctx, w.element);
    if (w.skew && !w.report.member) return w;
    return std::nullopt;
  };

  auto cs = cycles(g);
  if (!cs.empty()) {
    Path c = Path::from_edges(g, cs.front().edges);
    Element x = Element::monomial(f, Monomial(c, Path::trivial(c.range()))) -
                Element::monomial(f, Monomial(Path::trivial(c.source()), c));
    if (auto w = verify(std::move(x), "cycle"))
      return {std::move(w), "c - c* for cycle " + format_edges(g, cs.front().edges) +
                                " is skew and fails the loop-class condition"};
    return {std::nullopt, "cycle candidate failed verification"};
  }
  if (f.has_char_two()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (auto w = verify(vertex_element(g, f, v), "vertex"))
        return {std::move(w), "vertex " + g.vertex_name(v) +
                                  " is skew and its unit vector is outside the span of the B vectors"};
    }
    return {std::nullopt, "acyclic graph: every vertex unit vector lies in the span of the B vectors"};
  }
  return {std::nullopt,
          "acyclic graph outside characteristic 2: every skew element lies in the commutator "
          "subspace, so this method cannot separate"};
}

std::string format_vector(const Graph& g, const VertexVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [u, c] : v.entries()) {
    if (!first) out += ", ";
    out += g.vertex_name(u) + ":" + c.to_string();
    first = false;
  }
  return out + "}";
}

std::string format_vector(const Graph& g, const IntegerVertexVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [u, n] : v) {
    if (!first) out += ", ";
    out += g.vertex_name(u) + ":" + std::to_string(n);
    first = false;
  }
  return out + "}";
}

std::string format_class(const Graph& g, const RotationClass& c) {
  return format_edges(g, c.representative.edges());
}

}  // namespace lpa
