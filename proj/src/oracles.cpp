#include "lpa/oracles.hpp"

#include <random>
#include <sstream>

#include "lpa/expression.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/random.hpp"

namespace lpa {

Element SparseEchelon::reduce(Element v) const {
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Monomial lead = it->first;
    v -= row->second * Scalar(it->second);
    // terms below `lead` are untouched; resume there
    it = v.terms().lower_bound(lead);
  }
  return v;
}

bool SparseEchelon::insert(const Element& v) {
  Element r = reduce(v);
  if (r.is_zero()) return false;
  Monomial lead = r.terms().begin()->first;
  r *= r.terms().begin()->second.inverse();
  rows_.emplace(std::move(lead), std::move(r));
  return true;
}

bool SparseEchelon::contains(const Element& v) const { return reduce(v).is_zero(); }

std::string SpanOracleResult::format() const {
  return (found ? "FoundInSpan(" : "NotFoundUpTo(") + std::to_string(bound) + ")";
}

CommutatorSpanOracle::CommutatorSpanOracle(const LeavittContext& ctx, std::size_t max_len)
    : ctx_(ctx), max_len_(max_len), span_(ctx.field()) {
  const FieldSpec f = ctx.field();
  auto monos = irreducible_monomials(ctx, max_len);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i + 1; j < monos.size(); ++j) {
      Element c(f);
      if (auto ab = multiply(monos[i], monos[j])) c.add_term(*ab, Scalar::one(f));
      if (auto ba = multiply(monos[j], monos[i])) c.add_term(*ba, -Scalar::one(f));
      if (c.is_zero()) continue;
      span_.insert(normal_form(ctx, c));
    }
  }
}

SpanOracleResult CommutatorSpanOracle::query(const Element& x) const {
  return {span_.contains(normal_form(ctx_, x)), max_len_};
}

SpanOracleResult commutator_span_oracle(const LeavittContext& ctx, std::size_t max_len, const Element& x) {
  return CommutatorSpanOracle(ctx, max_len).query(x);
}

std::string DifferentialReport::format() const {
  std::ostringstream os;
  os << name << ": checks=" << checks << " mismatches=" << mismatches.size() << '\n';
  for (const auto& m : mismatches) os << "  mismatch: " << m << '\n';
  return os.str();
}

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(FieldSpec f, unsigned n) { return Matrix(n, std::vector<Scalar>(n, Scalar::zero(f))); }

Matrix matrix_image(const Element& x, unsigned n) {
  Matrix m = zero_matrix(x.field(), n);
  for (const auto& [mon, c] : x.terms()) m[mon.real.source()][mon.ghost.source()] += c;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, FieldSpec f) {
  const auto n = static_cast<unsigned>(a.size());
  Matrix out = zero_matrix(f, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (unsigned j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  return t;
}

// A random element of the ideal: a * g_v * b for a random regular v.
Element random_ideal_element(const Graph& g, FieldSpec f, std::mt19937_64& rng) {
  auto reg = regular_vertices(g);
  Element out(f);
  if (reg.empty()) return out;
  VertexId v = reg[std::uniform_int_distribution<std::size_t>(0, reg.size() - 1)(rng)];
  Element a = random_element(g, f, rng, {2, 3});
  Element b = random_element(g, f, rng, {2, 3});
  return mul(mul(a, ideal_generator(g, f, v)), b);
}

using Laurent = std::map<long, Scalar>;

Laurent laurent_image(const Element& x) {
  Laurent out;
  for (const auto& [m, c] : x.terms()) {
    long k = static_cast<long>(m.real.length()) - static_cast<long>(m.ghost.length());
    auto [it, inserted] = out.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Scalar p = x * y;
      auto [it, inserted] = out.try_emplace(i + j, p);
      if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

}  // namespace

DifferentialReport matrix_oracle_line(unsigned n, FieldSpec f, std::size_t samples, std::uint64_t seed) {
  if (n < 2 || n > 8) throw std::invalid_argument("matrix oracle supports 2 <= n <= 8");
  DifferentialReport report{"matrix-line-" + std::to_string(n) + " over " + to_string(f), 0, {}};
  Graph g = fixtures::line(n);
  LeavittContext ctx(g, f);
  auto fail = [&](const std::string& what) { report.mismatches.push_back(what); };

  auto basis = enumerate_lpa_basis(ctx);
  ++report.checks;
  if (!basis || basis->size() != std::size_t(n) * n) {
    fail("basis count " + (basis ? std::to_string(basis->size()) : std::string("infinite")) +
         " != " + std::to_string(n * n));
  } else {
    // the basis must hit every matrix unit exactly once
    std::vector<std::vector<int>> hits(n, std::vector<int>(n, 0));
    for (const auto& m : *basis) ++hits[m.real.source()][m.ghost.source()];
    ++report.checks;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k)
        if (hits[i][k] != 1) fail("matrix unit (" + std::to_string(i) + "," + std::to_string(k) + ") hit " +
                                  std::to_string(hits[i][k]) + " times");
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Element x = random_element(g, f, rng);
    Element y = random_element(g, f, rng);
    Matrix mx = matrix_image(x, n);
    Matrix my = matrix_image(y, n);

    report.checks += 5;
    if (matrix_image(normal_form(ctx, mul(x, y)), n) != matmul(mx, my, f))
      fail("product of " + to_string(g, x) + " and " + to_string(g, y));
    if (matrix_image(normal_form(ctx, x), n) != mx) fail("normal form moved image of " + to_string(g, x));
    if (matrix_image(star(x), n) != transpose(mx)) fail("star is not transpose on " + to_string(g, x));
    if ((normal_form(ctx, x) == normal_form(ctx, y)) != (mx == my))
      fail("equality disagrees on " + to_string(g, x) + " vs " + to_string(g, y));
    Element z = x + random_ideal_element(g, f, rng);
    if (!(normal_form(ctx, z) == normal_form(ctx, x)) || matrix_image(z, n) != mx)
      fail("ideal perturbation of " + to_string(g, x) + " changed its class");
  }
  return report;
}

DifferentialReport laurent_oracle_rose1(FieldSpec f, std::size_t samples, std::uint64_t seed) {
  DifferentialReport report{"laurent-rose-1 over " + to_string(f), 0, {}};
  Graph g = fixtures::rose(1);
  LeavittContext ctx(g, f);
  auto fail = [&](const std::string& what) { report.mismatches.push_back(what); };

  ++report.checks;
  for (const auto& m : irreducible_monomials(ctx, 6)) {
    if (!m.real.is_trivial() && !m.ghost.is_trivial()) fail("irreducible monomial " + to_string(g, m));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Element x = random_element(g, f, rng);
    Element y = random_element(g, f, rng);
    Laurent lx = laurent_image(x);
    Laurent ly = laurent_image(y);

    report.checks += 5;
    if (laurent_image(normal_form(ctx, mul(x, y))) != laurent_mul(lx, ly))
      fail("product of " + to_string(g, x) + " and " + to_string(g, y));
    if (laurent_image(normal_form(ctx, x)) != lx) fail("normal form moved image of " + to_string(g, x));
    if (normal_form(ctx, x).is_zero() != lx.empty()) fail("zero test disagrees on " + to_string(g, x));
    if ((normal_form(ctx, x) == normal_form(ctx, y)) != (lx == ly))
      fail("equality disagrees on " + to_string(g, x) + " vs " + to_string(g, y));
    Element z = x + random_ideal_element(g, f, rng);
    if (!(normal_form(ctx, z) == normal_form(ctx, x)) || laurent_image(z) != lx)
      fail("ideal perturbation of " + to_string(g, x) + " changed its class");
  }
  return report;
}

std::string IdealSkewAudit::format() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "FINDING ideal-skew-audit: x = " << printed << '\n'
     << "  f1 nonzero in Cohn algebra: " << b(nonzero_in_cohn) << '\n'
     << "  f2 in ideal I: " << b(in_ideal) << '\n'
     << "  f3 skew in Cohn algebra: " << b(skew_in_cohn) << '\n'
     << "  consistent with a zero intersection of I and the skew elements (char != 2): "
     << b(!(nonzero_in_cohn && in_ideal && skew_in_cohn)) << '\n';
  return os.str();
}

IdealSkewAudit audit_ideal_skew(FieldSpec f) {
  Graph g = fixtures::ideal_audit_graph();
  LeavittContext ctx(g, f);
  VertexId w = *g.find_vertex("w");
  Element gw = ideal_generator(g, f, w);
  Element a = edge_element(g, f, *g.find_edge("a"));
  Element b = edge_element(g, f, *g.find_edge("b"));
  Element x = mul(mul(a, gw), star(b)) - mul(mul(b, gw), star(a));

  IdealSkewAudit out;
  out.nonzero_in_cohn = !x.is_zero();
  out.in_ideal = in_ideal_I(ctx, x);
  out.skew_in_cohn = is_skew_cohn(x);
  out.printed = to_string(g, x);
  out.element = std::move(x);
  return out;
}

}  // namespace lpa
