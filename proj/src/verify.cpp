#include "lpa/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "lpa/expression.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/lie.hpp"
#include "lpa/oracles.hpp"
#include "lpa/random.hpp"

namespace lpa::verify {

std::string Outcome::line() const {
  std::string tag = finding ? "FINDING" : (pass ? "PASS" : "FAIL");
  if (finding && !pass) tag = "FAIL";
  return tag + " " + name + (detail.empty() ? "" : ": " + detail);
}

namespace {

std::size_t budget(const Options& o, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * o.scale)));
}

// Collects failures with a cap on how many are spelled out.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  Outcome outcome(const std::string& name, const std::string& extra = {}) const {
    std::string d = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    if (!extra.empty()) d += "; " + extra;
    if (failures) d += "; first: " + first;
    return {name, failures == 0 && cases > 0, false, d};
  }
};

std::mt19937_64 engine(const Options& o, std::uint64_t salt) {
  std::seed_seq seq{o.seed, salt};
  return std::mt19937_64(seq);
}

std::string cell(const std::string& fixture, FieldSpec f) { return fixture + "/" + to_string(f); }

Outcome algebra_laws(const Options& o) {
  Tally t;
  auto rng = engine(o, 1);
  for (const auto& [name, g] : fixtures::standard_set()) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      for (std::size_t i = 0; i < budget(o, 1000); ++i) {
        Element x = random_element(g, f, rng);
        Element y = random_element(g, f, rng);
        Element z = random_element(g, f, rng);
        auto where = [&] { return cell(name, f) + " x=" + to_string(g, x) + " y=" + to_string(g, y); };
        t.check(star(star(x)) == x, where);
        t.check(star(mul(x, y)) == mul(star(y), star(x)), where);
        t.check(mul(mul(x, y), z) == mul(x, mul(y, z)), where);
        t.check(star(x + y) == star(x) + star(y), where);
      }
    }
  }
  return t.outcome("involution and algebra laws");
}

Outcome generator_annihilation(const Options& o) {
  Tally t;
  for (const auto& [name, g] : fixtures::standard_set()) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      auto paths = paths_up_to(g, 4);
      for (VertexId v : regular_vertices(g)) {
        Element y = ideal_generator(g, f, v);
        for (const auto& path : paths) {
          if (path.is_trivial()) continue;
          Element pe = Element::monomial(f, Monomial(path, Path::trivial(path.range())));
          auto where = [&] { return cell(name, f) + " v=" + g.vertex_name(v) + " p=" + to_string(g, path); };
          t.check(mul(y, pe).is_zero(), where);
          t.check(mul(star(pe), y).is_zero(), where);
        }
      }
    }
  }
  return t.outcome("ideal generator annihilates nontrivial paths");
}

Outcome cohn_basis(const Options& o) {
  Tally t;
  auto rng = engine(o, 3);
  for (const auto& [name, g] : fixtures::standard_set()) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      for (std::size_t i = 0; i < budget(o, 500); ++i) {
        Element x = random_element(g, f, rng);
        std::string text = to_string(g, x);
        t.check(parse_element(g, f, text) == x, [&] { return cell(name, f) + " round trip of " + text; });
      }
      std::vector<Monomial> monos;
      for (const auto& a : paths_up_to(g, 2))
        for (const auto& b : paths_up_to(g, 2))
          if (a.range() == b.range()) monos.emplace_back(a, b);
      for (const auto& a : monos)
        for (const auto& b : monos) {
          Element prod = mul(Element::monomial(f, a), Element::monomial(f, b));
          bool closed = prod.is_zero() || (prod.size() == 1 && prod.terms().begin()->second.is_one());
          t.check(closed, [&] { return cell(name, f) + " product " + to_string(g, a) + " * " + to_string(g, b); });
        }
    }
  }
  return t.outcome("Cohn basis expansion and closure");
}

Outcome leavitt_normal_form(const Options& o) {
  Tally t;
  auto rng = engine(o, 4);
  for (const auto& [name, g] : fixtures::standard_set()) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      // alternative choice: last declared outgoing edge
      std::map<VertexId, EdgeId> last;
      for (VertexId v : regular_vertices(g)) last[v] = g.out_edges(v).back();
      LeavittContext alt(g, f, last);

      for (VertexId v : regular_vertices(g))
        t.check(normal_form(ctx, ideal_generator(g, f, v)).is_zero(),
                [&] { return cell(name, f) + " generator at " + g.vertex_name(v); });

      for (std::size_t i = 0; i < budget(o, 200); ++i) {
        Element x = random_element(g, f, rng);
        Element y = random_element(g, f, rng);
        Scalar a = random_scalar(f, rng);
        Scalar b = random_scalar(f, rng);
        Element nx = normal_form(ctx, x);
        Element ny = normal_form(ctx, y);
        auto where = [&] { return cell(name, f) + " x=" + to_string(g, x) + " y=" + to_string(g, y); };
        t.check(normal_form(ctx, nx) == nx, where);
        t.check(normal_form(ctx, a * x + b * y) == a * nx + b * ny, where);
        t.check(normal_form(ctx, star(x)) == star(nx), where);
        t.check(normal_form(ctx, mul(x, y)) == normal_form(ctx, mul(nx, ny)), where);
        t.check(normal_form_shuffled(ctx, x, rng) == nx, where);
        bool irreducible = true;
        for (const auto& [m, c] : nx.terms()) irreducible = irreducible && !ctx.is_reducible(m);
        t.check(irreducible, where);
        t.check(normal_form(ctx, x - y).is_zero() == normal_form(alt, x - y).is_zero(), where);
        auto reg = regular_vertices(g);
        if (!reg.empty()) {
          VertexId v = reg[i % reg.size()];
          Element z = x + mul(mul(y, ideal_generator(g, f, v)), star(y));
          t.check(normal_form(ctx, z - x).is_zero() && normal_form(alt, z - x).is_zero(), where);
          t.check(normal_form(ctx, z) == nx, where);
        }
      }
    }
  }
  return t.outcome("Leavitt normal form");
}

Outcome differential_oracles(const Options& o) {
  Tally t;
  std::size_t samples = budget(o, 500);
  for (auto p : o.characteristics) {
    FieldSpec f(p);
    for (unsigned n = 2; n <= 6; ++n) {
      auto r = matrix_oracle_line(n, f, samples, o.seed + n);
      t.check(r.ok(), [&] { return r.format(); });
    }
    auto r = laurent_oracle_rose1(f, samples, o.seed);
    t.check(r.ok(), [&] { return r.format(); });
  }
  return t.outcome("matrix-unit and Laurent differential oracles");
}

Outcome skew_decompositions(const Options& o) {
  Tally t;
  auto rng = engine(o, 6);
  for (const auto& [name, g] : fixtures::standard_set()) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      for (std::size_t i = 0; i < budget(o, 500); ++i) {
        Element x = random_skew_element(g, f, rng);
        auto where = [&] { return cell(name, f) + " x=" + to_string(g, x); };
        auto dc = decompose_skew_cohn(x);
        t.check(dc.reconstruct(f) == x, where);
        auto dl = decompose_skew_lpa(ctx, x);
        t.check(dl.reconstruct(f) == normal_form(ctx, x), where);
        if (!f.has_char_two()) {
          t.check(dc.diagonal.empty() && dl.diagonal.empty(), where);
          for (const auto& pr : canonical_pairing(x).pairs) t.check(pr.backward == -pr.forward, where);
        }
        Element y = random_element(g, f, rng);
        if (!is_skew_cohn(y)) {
          bool rejected = false;
          try {
            decompose_skew_cohn(y);
          } catch (const NotSkewError&) {
            rejected = true;
          }
          t.check(rejected, [&] { return cell(name, f) + " accepted non-skew " + to_string(g, y); });
        }
        if (!is_skew_lpa(ctx, y)) {
          bool rejected = false;
          try {
            decompose_skew_lpa(ctx, y);
          } catch (const NotSkewError&) {
            rejected = true;
          }
          t.check(rejected, [&] { return cell(name, f) + " accepted non-skew class " + to_string(g, y); });
        }
      }
    }
  }
  return t.outcome("skew decompositions in Cohn and Leavitt algebras");
}

// Random combination of irreducible monomials of total length <= 2,
// nudged towards the commutator subspace.
Element short_candidate(const LeavittContext& ctx, const std::vector<Monomial>& monos, std::mt19937_64& rng) {
  const FieldSpec f = ctx.field();
  const Graph& g = ctx.graph();
  Element x(f);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  for (std::size_t i = 0; i < n; ++i)
    x.add_term(monos[std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(rng)], random_scalar(f, rng));
  auto d = classify(ctx, x);
  for (const auto* fam : {&d.xyx, &d.zwz})
    for (const auto& [cls, terms] : *fam) {
      Scalar s = Scalar::zero(f);
      for (const auto& c : terms) s += c.coef;
      const auto& last = terms.back();
      Path longer = last.outer.concat(last.loop);
      Monomial m = fam == &d.xyx ? Monomial(longer, last.outer) : Monomial(last.outer, longer);
      x.add_term(m, -s);
    }
  auto report = in_commutator(ctx, x);
  if (!report.diagonal_in_span) {
    Scalar total = Scalar::zero(f);
    for (const auto& [v, c] : report.diagonal_vector.entries()) total += c;
    x.add_term(Monomial::vertex(static_cast<VertexId>(g.num_vertices() - 1)), -total);
  }
  return x;
}

Outcome commutator_vs_span(const Options& o) {
  Tally t;
  auto rng = engine(o, 7);
  std::size_t decider_true = 0;
  std::size_t found = 0;
  for (const auto& [name, g] : {fixtures::Named{"R2", fixtures::rose(2)}, fixtures::Named{"A3", fixtures::line(3)}}) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      CommutatorSpanOracle oracle(ctx, 4);
      auto short_monos = irreducible_monomials(ctx, 2);
      auto gen_monos = irreducible_monomials(ctx, 4);
      auto pick = [&](const std::vector<Monomial>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
      };

      for (std::size_t i = 0; i < budget(o, 200); ++i) {
        // combinations of generators are in the span by construction
        Element x(f);
        for (int k = 0; k < 3; ++k) {
          Element a = Element::monomial(f, pick(gen_monos));
          Element b = Element::monomial(f, pick(gen_monos));
          x += random_scalar(f, rng) * bracket(a, b);
        }
        auto where = [&] { return cell(name, f) + " x=" + to_string(g, x); };
        auto hit = oracle.query(x);
        t.check(hit.found, where);
        if (hit.found) {
          ++found;
          t.check(in_commutator(ctx, x).member, where);
        }

        Element y = short_candidate(ctx, short_monos, rng);
        auto where_y = [&] { return cell(name, f) + " y=" + to_string(g, y); };
        bool member = in_commutator(ctx, y).member;
        bool in_span = oracle.query(y).found;
        if (in_span) t.check(member, where_y);
        if (member) {
          ++decider_true;
          t.check(in_span, where_y);
        }
      }

      std::vector<Element> canaries;
      if (name == "R2") canaries.push_back(edge_element(g, f, *g.find_edge("e")));
      if (name == "A3" && f.has_char_two()) canaries.push_back(vertex_element(g, f, *g.find_vertex("v1")));
      for (const auto& c : canaries) {
        auto where = [&] { return cell(name, f) + " canary " + to_string(g, c); };
        t.check(!in_commutator(ctx, c).member, where);
        t.check(!oracle.query(c).found, where);
      }
    }
  }
  t.check(decider_true > 0, [] { return std::string("no decider-true short samples"); });
  return t.outcome("commutator decider against bounded span oracle",
                   std::to_string(found) + " span hits, " + std::to_string(decider_true) + " decider-true short samples");
}

Outcome cycle_witnesses(const Options& o) {
  Tally t;
  std::vector<fixtures::Named> graphs{{"R2", fixtures::rose(2)},
                                      {"R3", fixtures::rose(3)},
                                      {"R4", fixtures::rose(4)},
                                      {"C2", fixtures::two_cycle()}};
  for (const auto& [name, g] : graphs) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      auto w = witness_herstein(ctx);
      auto where = [&] { return cell(name, f) + " " + w.explanation; };
      t.check(w.witness.has_value(), where);
      if (!w.witness) continue;
      Path c = Path::from_edges(g, cycles(g).front().edges);
      Element expected = Element::monomial(f, Monomial(c, Path::trivial(c.range()))) -
                         Element::monomial(f, Monomial(Path::trivial(c.source()), c));
      t.check(w.witness->route == "cycle" && w.witness->element == expected, where);
      t.check(is_skew_lpa(ctx, w.witness->element), where);
      auto report = in_commutator(ctx, w.witness->element);
      t.check(!report.member, where);
      RotationClass cls = rotation_canonical(g, c);
      bool sum_one = false;
      for (const auto& s : report.xyx_sums)
        if (s.cls == cls) sum_one = s.sum.is_one();
      t.check(sum_one && report.first_failure == "cond2 class=" + format_class(g, cls), where);
    }
  }
  return t.outcome("cycle witnesses c - c* outside the commutator subspace");
}

Outcome line_witnesses(const Options& o) {
  Tally t;
  FieldSpec f(2);
  for (unsigned n = 2; n <= 6; ++n) {
    Graph g = fixtures::line(n);
    LeavittContext ctx(g, f);
    std::string name = "A" + std::to_string(n);
    t.check(is_simple_lpa(g).simple, [&] { return name + " not simple"; });
    for (VertexId v = 0; v < n; ++v) {
      Element x = vertex_element(g, f, v);
      auto where = [&] { return name + " vertex " + g.vertex_name(v); };
      t.check(is_skew_lpa(ctx, x), where);
      auto r = in_commutator(ctx, x);
      t.check(!r.member && !r.diagonal_in_span, where);
    }
    auto w = witness_herstein(ctx);
    t.check(w.witness.has_value() && w.witness->route == "vertex" &&
                w.witness->element == vertex_element(g, f, 0),
            [&] { return name + " witness: " + w.explanation; });
    auto basis = enumerate_lpa_basis(ctx);
    t.check(basis && basis->size() == std::size_t(n) * n, [&] { return name + " basis count"; });
  }
  (void)o;
  return t.outcome("line graphs over GF(2): simple with vertex witnesses");
}

Outcome acyclic_skew_membership(const Options& o) {
  Tally t;
  auto rng = engine(o, 10);
  for (const auto& [name, g] : fixtures::standard_set()) {
    if (!cycles(g).empty()) continue;
    for (std::uint32_t p : {0u, 3u, 5u}) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      for (std::size_t i = 0; i < budget(o, 200); ++i) {
        Element x = random_skew_element(g, f, rng);
        t.check(in_commutator(ctx, x).member, [&] { return cell(name, f) + " x=" + to_string(g, x); });
      }
    }
  }
  return t.outcome("acyclic graphs: skew elements lie in the commutator subspace");
}

Outcome simplicity_verdicts(const Options&) {
  Tally t;
  auto expect = [&](const std::string& name, const Graph& g, bool simple) {
    t.check(is_simple_lpa(g).simple == simple, [&] { return name + " expected " + (simple ? "simple" : "not simple"); });
  };
  expect("R1", fixtures::rose(1), false);
  for (unsigned n = 2; n <= 4; ++n) expect("R" + std::to_string(n), fixtures::rose(n), true);
  for (unsigned n = 2; n <= 6; ++n) expect("A" + std::to_string(n), fixtures::line(n), true);
  expect("I2", fixtures::two_isolated(), false);
  return t.outcome("simplicity verdicts");
}

Outcome ideal_skew_audit(const Options&) {
  auto a = audit_ideal_skew(FieldSpec::rationals());
  Outcome out{"ideal-skew audit", a.nonzero_in_cohn && a.in_ideal && a.skew_in_cohn, true, {}};
  out.detail = "x = " + a.printed + "; f1 nonzero=" + (a.nonzero_in_cohn ? "true" : "false") +
               " f2 in_ideal=" + (a.in_ideal ? "true" : "false") + " f3 skew=" + (a.skew_in_cohn ? "true" : "false") +
               "; a nonzero skew element of the ideal exists in char 0";
  return out;
}

Outcome skew_commutator_shape(const Options& o) {
  Tally t;
  auto rng = engine(o, 12);
  for (const auto& [name, g] : {fixtures::Named{"R2", fixtures::rose(2)}, fixtures::Named{"A3", fixtures::line(3)}}) {
    for (auto p : o.characteristics) {
      FieldSpec f(p);
      LeavittContext ctx(g, f);
      for (std::size_t i = 0; i < budget(o, 200); ++i) {
        Element a = random_skew_element(g, f, rng, {2, 3});
        Element b = random_skew_element(g, f, rng, {2, 3});
        Element x = bracket(a, b);
        auto where = [&] { return cell(name, f) + " x=" + to_string(g, x); };
        bool ok = in_skew_cap_commutator(ctx, x);
        t.check(ok, where);
        if (!ok) continue;
        auto form = decompose_skew_commutator(ctx, x);
        t.check(form.reconstruct(f) == normal_form(ctx, x), where);
        for (const auto& s : form.class_sums) t.check(s.sum.is_zero(), where);
        if (!f.has_char_two()) t.check(form.pp.empty(), where);
      }
    }
  }
  // e* - e matches the unconstrained loop-conjugate shape with c = 1, yet
  // its class sum is nonzero and it is outside the commutator subspace.
  Graph g = fixtures::rose(2);
  LeavittContext ctx(g, FieldSpec::rationals());
  Element x = parse_element(g, ctx.field(), "e* - e");
  bool skew = is_skew_lpa(ctx, x);
  bool member = in_commutator(ctx, x).member;
  Outcome out = t.outcome("skew commutator-subspace shape");
  out.finding = true;
  out.pass = out.pass && skew && !member;
  out.detail += "; e* - e on R2 has the conjugate shape with coefficient sum 1, is skew=" +
                std::string(skew ? "true" : "false") + ", in commutator=" + (member ? "true" : "false") +
                ": the shape alone does not force membership, the per-class zero sums are needed";
  return out;
}

}  // namespace

std::vector<Check> checks() {
  return {
      {"algebra-laws", algebra_laws},
      {"generator-annihilation", generator_annihilation},
      {"cohn-basis", cohn_basis},
      {"normal-form", leavitt_normal_form},
      {"differential-oracles", differential_oracles},
      {"skew-decompositions", skew_decompositions},
      {"commutator-vs-span", commutator_vs_span},
      {"cycle-witnesses", cycle_witnesses},
      {"line-witnesses", line_witnesses},
      {"acyclic-skew-membership", acyclic_skew_membership},
      {"simplicity", simplicity_verdicts},
      {"ideal-skew-audit", ideal_skew_audit},
      {"skew-commutator-shape", skew_commutator_shape},
  };
}

bool run_all(const Options& opts, std::ostream& out) {
  bool ok = true;
  for (const auto& c : checks()) {
    Outcome r = c.run(opts);
    out << r.line() << '\n';
    ok = ok && r.pass;
  }
  out << (ok ? "verify: all checks passed" : "verify: FAILURES") << '\n';
  return ok;
}

}  // namespace lpa::verify
