#include "lpa/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace lpa {

ExpressionError::ExpressionError(const std::string& what, std::size_t position)
    : std::runtime_error("at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

enum class Tok { Ident, Number, Slash, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  bool starred = false;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && is_ident_char(s[i])) ++i;
      Token t{Tok::Ident, std::string(s.substr(start, i - start)), false, start};
      if (i < s.size() && s[i] == '*') {
        t.starred = true;
        ++i;
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
        throw ExpressionError("identifier may not start with a digit", start);
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), false, start});
    } else if (c == '/') {
      out.push_back({Tok::Slash, "/", false, i++});
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", false, i++});
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-", false, i++});
    } else if (c == '*') {
      throw ExpressionError("`*` must follow an identifier with no space", i);
    } else {
      throw ExpressionError(std::string("unexpected character `") + c + "`", i);
    }
  }
  out.push_back({Tok::End, "", false, s.size()});
  return out;
}

class Parser {
 public:
  Parser(const Graph& g, FieldSpec f, std::string_view text)
      : g_(g), f_(f), toks_(lex(text)) {}

  Element parse() {
    Element out(f_);
    bool first = true;
    while (true) {
      Scalar sign = Scalar::one(f_);
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        if (peek().kind == Tok::Minus) sign = -sign;
        ++at_;
      } else if (!first) {
        if (peek().kind == Tok::End) break;
        throw ExpressionError("expected `+` or `-`, found `" + peek().text + "`", peek().pos);
      }
      term(out, sign);
      first = false;
      if (peek().kind == Tok::End) break;
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[at_]; }

  void term(Element& out, Scalar coef) {
    bool has_coef = false;
    if (peek().kind == Tok::Number) {
      std::string lit = toks_[at_++].text;
      if (peek().kind == Tok::Slash) {
        ++at_;
        if (peek().kind != Tok::Number)
          throw ExpressionError("expected a positive integer denominator", peek().pos);
        const auto& den = toks_[at_++];
        if (mpz_class(den.text) == 0) throw ExpressionError("zero denominator", den.pos);
        lit += "/" + den.text;
        try {
          coef *= Scalar::parse(f_, lit);
        } catch (const ScalarError& e) {
          throw ExpressionError(e.what(), den.pos);
        }
      } else {
        coef *= Scalar::parse(f_, lit);
      }
      has_coef = true;
    }
    if (peek().kind != Tok::Ident) {
      if (!has_coef) throw ExpressionError("expected a term, found `" + peek().text + "`", peek().pos);
      for (VertexId v = 0; v < g_.num_vertices(); ++v) out.add_term(Monomial::vertex(v), coef);
      return;
    }
    std::optional<Monomial> product;
    bool zero = false;
    bool last_vertex = false;
    while (peek().kind == Tok::Ident) {
      const Token& t = toks_[at_++];
      Monomial m = factor(t);
      const bool is_vertex = m.total_length() == 0;
      if (product) {
        if (product->right_vertex() != m.left_vertex()) {
          // vertices are orthogonal idempotents
          if (!is_vertex && !last_vertex)
            throw ExpressionError("factor `" + t.text + (t.starred ? "*" : "") +
                                      "` does not compose with the preceding factor",
                                  t.pos);
          zero = true;
        }
        if (!zero) {
          auto next = multiply(*product, m);
          if (next)
            product = std::move(*next);
          else
            zero = true;
        }
        if (zero) product = Monomial::vertex(m.right_vertex());
      } else {
        product = std::move(m);
      }
      last_vertex = is_vertex;
    }
    if (!zero) out.add_term(*product, coef);
  }

  Monomial factor(const Token& t) const {
    // v^* = v
    if (auto v = g_.find_vertex(t.text)) return Monomial::vertex(*v);
    if (auto e = g_.find_edge(t.text))
      return t.starred ? Monomial::ghost_edge(g_, *e) : Monomial::edge(g_, *e);
    throw ExpressionError("unknown identifier `" + t.text + "`", t.pos);
  }

  const Graph& g_;
  FieldSpec f_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

Element parse_element(const Graph& g, FieldSpec f, std::string_view text) {
  return Parser(g, f, text).parse();
}

std::string to_string(const Graph& g, const Path& p) {
  if (p.is_trivial()) return g.vertex_name(p.source());
  std::string out;
  for (EdgeId e : p.edges()) {
    if (!out.empty()) out += ' ';
    out += g.edge_name(e);
  }
  return out;
}

std::string to_string(const Graph& g, const Monomial& m) {
  if (m.real.is_trivial() && m.ghost.is_trivial()) return g.vertex_name(m.real.source());
  std::string out;
  for (EdgeId e : m.real.edges()) {
    if (!out.empty()) out += ' ';
    out += g.edge_name(e);
  }
  const auto& ghost = m.ghost.edges();
  for (auto it = ghost.rbegin(); it != ghost.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += g.edge_name(*it) + "*";
  }
  return out;
}

std::string to_string(const Graph& g, const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Scalar mag = c;
    if (c.is_negative()) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + " ";
    out += to_string(g, m);
    first = false;
  }
  return out;
}

}  // namespace lpa
