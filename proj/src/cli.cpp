#include "lpa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/expression.hpp"
#include "lpa/lie.hpp"
#include "lpa/oracles.hpp"
#include "lpa/verify.hpp"

namespace lpa::cli {

namespace {

struct Args {
  std::string graph_path;
  std::uint32_t characteristic = 0;
  bool cohn = false;
  std::vector<std::string> special;
  std::vector<std::string> exprs;
  std::string form = "skew";
  std::size_t max_len = 3;
  unsigned n = 3;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> chars{0, 2, 3};
  double scale = 1.0;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file `" + path + "`");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Graph::parse(buf.str());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

LeavittContext load_context(const Args& a) {
  Graph g = load_graph(a.graph_path);
  std::map<VertexId, EdgeId> special;
  for (const auto& s : a.special) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--special expects vertex=edge, got `" + s + "`");
    auto v = g.find_vertex(s.substr(0, eq));
    auto e = g.find_edge(s.substr(eq + 1));
    if (!v || !e) throw std::invalid_argument("--special: unknown vertex or edge in `" + s + "`");
    special[*v] = *e;
  }
  return LeavittContext(std::move(g), FieldSpec(a.characteristic), special);
}

Element expr(const LeavittContext& ctx, const Args& a, std::size_t i) {
  if (a.exprs.size() <= i) throw std::invalid_argument("missing expression argument");
  std::string_view text = a.exprs[i];
  if (text.starts_with(" -")) text.remove_prefix(1);
  return parse_element(ctx.graph(), ctx.field(), text);
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::string show(const Graph& g, const Path& p) { return to_string(g, p); }

int cmd_check(const Args& a, std::ostream& out) {
  Graph g = load_graph(a.graph_path);
  out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  out << "regular:";
  for (VertexId v : regular_vertices(g)) out << ' ' << g.vertex_name(v);
  out << "\ncycles:";
  for (const auto& c : cycles(g))
    out << ' ' << format_edges(g, c.edges) << (cycle_has_exit(g, c) ? "" : " (no exit)");
  out << '\n';
  return kTrue;
}

int cmd_simple(const Args& a, std::ostream& out) {
  Graph g = load_graph(a.graph_path);
  auto r = is_simple_lpa(g);
  out << "simple: " << yes(r.simple) << '\n';
  if (!r.simple) out << "reason: " << r.reason << '\n';
  return r.simple ? kTrue : kFalse;
}

int cmd_bvec(const Args& a, std::ostream& out) {
  Graph g = load_graph(a.graph_path);
  FieldSpec f(a.characteristic);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "B(" << g.vertex_name(v) << ") = " << format_vector(g, b_vector(g, v));
    if (!f.is_rational()) out << " over " << to_string(f) << ": " << format_vector(g, to_field(f, b_vector(g, v)));
    out << '\n';
  }
  return kTrue;
}

Element in_algebra(const LeavittContext& ctx, const Args& a, const Element& x) {
  return a.cohn ? x : normal_form(ctx, x);
}

int cmd_unary(const Args& a, std::ostream& out, bool apply_star) {
  auto ctx = load_context(a);
  Element x = expr(ctx, a, 0);
  if (apply_star) x = star(x);
  out << to_string(ctx.graph(), in_algebra(ctx, a, x)) << '\n';
  return kTrue;
}

int cmd_binary(const Args& a, std::ostream& out, bool commutator) {
  auto ctx = load_context(a);
  Element x = expr(ctx, a, 0);
  Element y = expr(ctx, a, 1);
  Element z = commutator ? bracket(x, y) : mul(x, y);
  out << to_string(ctx.graph(), in_algebra(ctx, a, z)) << '\n';
  return kTrue;
}

int cmd_predicate(const Args& a, std::ostream& out, const std::string& name) {
  auto ctx = load_context(a);
  Element x = expr(ctx, a, 0);
  bool v = false;
  if (name == "skew")
    v = a.cohn ? is_skew_cohn(x) : is_skew_lpa(ctx, x);
  else if (name == "symmetric")
    v = a.cohn ? is_symmetric_cohn(x) : is_symmetric_lpa(ctx, x);
  else
    v = in_ideal_I(ctx, x);
  out << name << ": " << yes(v) << '\n';
  return v ? kTrue : kFalse;
}

int cmd_in_commutator(const Args& a, std::ostream& out, bool skew_too) {
  auto ctx = load_context(a);
  Element x = expr(ctx, a, 0);
  bool ok = true;
  if (skew_too) {
    bool skew = is_skew_lpa(ctx, x);
    out << "skew: " << yes(skew) << '\n';
    ok = skew;
  }
  auto r = in_commutator(ctx, x);
  out << r.format(ctx.graph());
  ok = ok && r.member;
  if (skew_too) out << "in-skew-commutator: " << yes(ok) << '\n';
  return ok ? kTrue : kFalse;
}

void print_skew(const Graph& g, const SkewDecomposition& d, std::ostream& out) {
  for (const auto& p : d.pairs)
    out << "pair: coef=" << p.coef << " gamma=" << show(g, p.gamma) << " lambda=" << show(g, p.lambda) << '\n';
  for (const auto& p : d.diagonal) out << "diagonal: coef=" << p.coef << " p=" << show(g, p.path) << '\n';
}

int cmd_decompose(const Args& a, std::ostream& out) {
  auto ctx = load_context(a);
  const Graph& g = ctx.graph();
  const FieldSpec f = ctx.field();
  Element x = expr(ctx, a, 0);
  bool exact = false;
  if (a.form == "skew") {
    auto d = a.cohn ? decompose_skew_cohn(x) : decompose_skew_lpa(ctx, x);
    print_skew(g, d, out);
    exact = a.cohn ? d.reconstruct(f) == x : equals_lpa(ctx, d.reconstruct(f), x);
  } else if (a.form == "classify") {
    auto d = classify(ctx, x);
    for (const auto& p : d.pp) out << "pp: coef=" << p.coef << " p=" << show(g, p.path) << '\n';
    for (const auto& q : d.qt) out << "qt: coef=" << q.coef << " q=" << show(g, q.q) << " t=" << show(g, q.t) << '\n';
    for (const auto& [cls, terms] : d.xyx)
      for (const auto& c : terms)
        out << "xyx: class=" << format_class(g, cls) << " coef=" << c.coef << " x=" << show(g, c.outer)
            << " y=" << show(g, c.loop) << '\n';
    for (const auto& [cls, terms] : d.zwz)
      for (const auto& c : terms)
        out << "zwz: class=" << format_class(g, cls) << " coef=" << c.coef << " z=" << show(g, c.outer)
            << " w=" << show(g, c.loop) << '\n';
    exact = equals_lpa(ctx, d.reconstruct(f), x);
  } else if (a.form == "skew-commutator") {
    auto d = decompose_skew_commutator(ctx, x);
    for (const auto& p : d.pp) out << "pp: coef=" << p.coef << " p=" << show(g, p.path) << '\n';
    for (const auto& q : d.qt)
      out << "qt: coef=" << q.coef << " q=" << show(g, q.q) << " t=" << show(g, q.t) << '\n';
    for (const auto& [cls, terms] : d.conjugates)
      for (const auto& c : terms)
        out << "conjugate: class=" << format_class(g, cls) << " coef=" << c.coef << " x=" << show(g, c.outer)
            << " y=" << show(g, c.loop) << '\n';
    for (const auto& s : d.class_sums) out << "class-sum: class=" << format_class(g, s.cls) << " sum=" << s.sum << '\n';
    if (!d.pp.empty()) {
      out << "certificate:";
      for (std::size_t v = 0; v < d.span_certificate.size(); ++v)
        if (!d.span_certificate[v].is_zero())
          out << " B(" << g.vertex_name(static_cast<VertexId>(v)) << ")*" << d.span_certificate[v];
      out << '\n';
    }
    exact = equals_lpa(ctx, d.reconstruct(f), x);
  } else {
    throw std::invalid_argument("unknown --form `" + a.form + "` (skew, classify, skew-commutator)");
  }
  out << "reconstruction: " << (exact ? "exact" : "MISMATCH") << '\n';
  return exact ? kTrue : kError;
}

int cmd_witness(const Args& a, std::ostream& out) {
  auto ctx = load_context(a);
  auto w = witness_herstein(ctx);
  if (!w.witness) {
    out << "witness: none\nreason: " << w.explanation << '\n';
    return kFalse;
  }
  out << "witness: " << to_string(ctx.graph(), w.witness->element) << '\n';
  out << "route: " << w.witness->route << '\n';
  out << "reason: " << w.explanation << '\n';
  out << "skew: " << yes(w.witness->skew) << '\n';
  out << w.witness->report.format(ctx.graph());
  return kTrue;
}

int cmd_basis(const Args& a, std::ostream& out) {
  auto ctx = load_context(a);
  auto basis = enumerate_lpa_basis(ctx);
  if (!basis) {
    out << "basis: infinite (the graph has a cycle)\n";
    return kTrue;
  }
  for (const auto& m : *basis) out << to_string(ctx.graph(), m) << '\n';
  out << "count: " << basis->size() << '\n';
  return kTrue;
}

int cmd_oracle_span(const Args& a, std::ostream& out) {
  auto ctx = load_context(a);
  Element x = expr(ctx, a, 0);
  auto r = commutator_span_oracle(ctx, a.max_len, x);
  out << r.format() << '\n';
  return r.found ? kTrue : kFalse;
}

int cmd_oracle_report(const DifferentialReport& r, std::ostream& out) {
  out << r.format();
  return r.ok() ? kTrue : kFalse;
}

int cmd_oracle_audit(const Args& a, std::ostream& out) {
  auto r = audit_ideal_skew(FieldSpec(a.characteristic));
  out << r.format();
  return kTrue;
}

int cmd_verify(const Args& a, std::uint64_t seed, std::ostream& out) {
  verify::Options o;
  o.characteristics = a.chars;
  o.seed = seed;
  o.scale = a.scale;
  for (auto p : o.characteristics) FieldSpec check(p);
  return verify::run_all(o, out) ? kTrue : kFalse;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt and Cohn path algebra toolkit", "lpa"};
  app.require_subcommand(1);
  Args a;

  auto graph_cmd = [&](const std::string& name, const std::string& help, int nexpr) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", a.graph_path, "graph file")->required();
    sub->add_option("--char", a.characteristic, "field characteristic: 0 or a prime");
    sub->add_option("--special", a.special, "special edge choice vertex=edge (repeatable)");
    if (nexpr > 0) sub->add_option("expr", a.exprs, "element expressions")->expected(nexpr)->required();
    return sub;
  };

  auto* check = graph_cmd("check", "validate a graph and summarize it", 0);
  auto* simple = graph_cmd("simple", "decide simplicity of the Leavitt path algebra", 0);
  auto* bvec = graph_cmd("bvec", "print the B vectors", 0);
  auto* nf = graph_cmd("nf", "normal form of an element", 1);
  nf->add_flag("--cohn", a.cohn, "print the Cohn expansion instead");
  auto* mulc = graph_cmd("mul", "product of two elements", 2);
  mulc->add_flag("--cohn", a.cohn, "work in the Cohn algebra");
  auto* brk = graph_cmd("bracket", "commutator xy - yx", 2);
  brk->add_flag("--cohn", a.cohn, "work in the Cohn algebra");
  auto* st = graph_cmd("star", "standard involution", 1);
  st->add_flag("--cohn", a.cohn, "work in the Cohn algebra");
  auto* skew = graph_cmd("is-skew", "x* = -x ?", 1);
  skew->add_flag("--cohn", a.cohn, "test in the Cohn algebra");
  auto* sym = graph_cmd("is-symmetric", "x* = x ?", 1);
  sym->add_flag("--cohn", a.cohn, "test in the Cohn algebra");
  auto* ideal = graph_cmd("in-ideal", "is x zero in the Leavitt path algebra?", 1);
  auto* comm = graph_cmd("in-commutator", "commutator-subspace membership", 1);
  auto* skcomm = graph_cmd("in-skew-commutator", "skew and in the commutator subspace", 1);
  auto* dec = graph_cmd("decompose", "structured decompositions", 1);
  dec->add_option("--form", a.form, "skew | classify | skew-commutator");
  dec->add_flag("--cohn", a.cohn, "skew decomposition in the Cohn algebra");
  auto* wit = graph_cmd("witness", "skew element outside the commutator subspace", 0);
  auto* basis = graph_cmd("basis", "canonical basis of an acyclic graph", 0);

  auto* oracle = app.add_subcommand("oracle", "independent oracles");
  oracle->require_subcommand(1);
  auto* ospan = oracle->add_subcommand("span", "bounded brute-force commutator span");
  ospan->add_option("graph", a.graph_path, "graph file")->required();
  ospan->add_option("expr", a.exprs, "element")->expected(1)->required();
  ospan->add_option("--char", a.characteristic, "field characteristic");
  ospan->add_option("--max-len", a.max_len, "monomial length bound")->check(CLI::PositiveNumber);
  ospan->add_option("--special", a.special, "special edge choice vertex=edge");
  auto* omat = oracle->add_subcommand("matrix", "line graph against matrix units");
  omat->add_option("--n", a.n, "number of vertices (2..8)");
  omat->add_option("--char", a.characteristic, "field characteristic");
  omat->add_option("--samples", a.samples, "random samples");
  omat->add_option("--seed", a.seed, "random seed");
  auto* olau = oracle->add_subcommand("laurent", "one-petal rose against Laurent polynomials");
  olau->add_option("--char", a.characteristic, "field characteristic");
  olau->add_option("--samples", a.samples, "random samples");
  olau->add_option("--seed", a.seed, "random seed");
  auto* oaud = oracle->add_subcommand("audit", "skew elements inside the ideal I");
  oaud->add_option("--char", a.characteristic, "field characteristic");

  auto* ver = app.add_subcommand("verify-paper", "run every acceptance check");
  ver->add_option("--chars", a.chars, "characteristics")->delimiter(',');
  std::uint64_t verify_seed = verify::Options{}.seed;
  ver->add_option("--seed", verify_seed, "random seed");
  ver->add_option("--scale", a.scale, "sample budget multiplier")->check(CLI::PositiveNumber);

  try {
    // a single dash starts a negative expression, never an option
    for (auto& s : args)
      if (s.size() > 1 && s[0] == '-' && s[1] != '-' && s != "-h") s.insert(0, " ");
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kTrue : kError;
  }

  try {
    if (*check) return cmd_check(a, out);
    if (*simple) return cmd_simple(a, out);
    if (*bvec) return cmd_bvec(a, out);
    if (*nf) return cmd_unary(a, out, false);
    if (*st) return cmd_unary(a, out, true);
    if (*mulc) return cmd_binary(a, out, false);
    if (*brk) return cmd_binary(a, out, true);
    if (*skew) return cmd_predicate(a, out, "skew");
    if (*sym) return cmd_predicate(a, out, "symmetric");
    if (*ideal) return cmd_predicate(a, out, "in-ideal");
    if (*comm) return cmd_in_commutator(a, out, false);
    if (*skcomm) return cmd_in_commutator(a, out, true);
    if (*dec) return cmd_decompose(a, out);
    if (*wit) return cmd_witness(a, out);
    if (*basis) return cmd_basis(a, out);
    if (*ospan) return cmd_oracle_span(a, out);
    if (*omat) return cmd_oracle_report(matrix_oracle_line(a.n, FieldSpec(a.characteristic), a.samples, a.seed), out);
    if (*olau) return cmd_oracle_report(laurent_oracle_rose1(FieldSpec(a.characteristic), a.samples, a.seed), out);
    if (*oaud) return cmd_oracle_audit(a, out);
    if (*ver) return cmd_verify(a, verify_seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace lpa::cli
