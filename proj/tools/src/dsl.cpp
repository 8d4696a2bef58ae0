// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb_cli/dsl.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace qweb::cli {

DslError::DslError(std::string kind, SourcePos pos, const std::string& msg)
    : std::runtime_error(kind + " error at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + msg),
      kind_(std::move(kind)),
      pos_(pos),
      detail_(msg) {}

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Semi, Star, Plus, Minus, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    unsigned char ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos start = pos;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (ch) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '/': k = Tok::Slash; break;
      default:
        throw DslError("syntax", start, "unexpected character '" + std::string(1, static_cast<char>(ch)) + "'");
    }
    out.push_back({k, std::string(1, static_cast<char>(ch)), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// Number of argument groups and their sizes (-1: any length) for each atom.
struct AtomShape {
  const char* name;
  std::vector<int> groups;
};

const std::vector<AtomShape>& atom_shapes() {
  static const std::vector<AtomShape> shapes = {
      {"id", {-1}},      {"merge", {2}},  {"split", {2}},  {"cross", {2}},
      {"wdot", {1}},     {"bdot", {1}},   {"omega", {2}},  {"omegac", {2}},
      {"packet", {1, -1, -1}},
  };
  return shapes;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse_all() {
    Expr e = sum();
    if (peek().kind != Tok::End) fail(peek(), "expected an operator, found " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw DslError("syntax", t.pos, msg);
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    ++at_;
  }

  static Expr binary(Expr::Kind k, SourcePos pos, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr sum() {
    Expr lhs = composite();
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Plus && t.kind != Tok::Minus) return lhs;
      Token op = take();
      Expr rhs = composite();
      lhs = binary(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, std::move(lhs),
                   std::move(rhs));
    }
  }

  Expr composite() {
    Expr lhs = tensor();
    while (peek().kind == Tok::Semi) {
      Token op = take();
      lhs = binary(Expr::Kind::Compose, op.pos, std::move(lhs), tensor());
    }
    return lhs;
  }

  Expr tensor() {
    Expr lhs = unary();
    while (peek().kind == Tok::Star) {
      Token op = take();
      lhs = binary(Expr::Kind::Tensor, op.pos, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    const Token& t = peek();
    if (t.kind == Tok::Minus || t.kind == Tok::Int) {
      Token start = t;
      Scalar f(1);
      if (accept(Tok::Minus)) f = Scalar(-1);
      if (peek().kind == Tok::Int) f *= rational();
      Expr e;
      e.kind = Expr::Kind::Scale;
      e.pos = start.pos;
      e.factor = f;
      e.children.push_back(unary());
      return e;
    }
    return primary();
  }

  Scalar rational() {
    Token num = take();
    mpq_class v(mpz_class(num.text));
    if (accept(Tok::Slash)) {
      if (peek().kind != Tok::Int) fail(peek(), "expected a denominator, found " + describe(peek()));
      Token den = take();
      mpz_class d(den.text);
      if (d == 0) fail(den, "zero denominator");
      v /= d;
    }
    return Scalar(v);
  }

  Expr primary() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Expr e = sum();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a diagram, found " + describe(t));
    Token name = take();
    const AtomShape* shape = nullptr;
    for (const auto& s : atom_shapes())
      if (name.text == s.name) shape = &s;
    if (!shape) fail(name, "unknown generator '" + name.text + "'");
    expect(Tok::LParen, "'('");
    Expr e;
    e.kind = Expr::Kind::Atom;
    e.pos = name.pos;
    e.name = name.text;
    e.args.emplace_back();
    while (peek().kind != Tok::RParen) {
      if (peek().kind == Tok::Semi) {
        take();
        e.args.emplace_back();
        continue;
      }
      if (!e.args.back().empty()) expect(Tok::Comma, "','");
      if (peek().kind != Tok::Int) fail(peek(), "expected a non-negative integer, found " + describe(peek()));
      Token num = take();
      int v = 0;
      auto [p, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
      if (ec != std::errc() || p != num.text.data() + num.text.size()) fail(num, "integer out of range");
      e.args.back().push_back(v);
    }
    Token close = take();
    if (e.args.size() != shape->groups.size())
      fail(close, name.text + " takes " + std::to_string(shape->groups.size()) + " argument group(s)");
    for (std::size_t g = 0; g < e.args.size(); ++g)
      if (shape->groups[g] >= 0 && static_cast<int>(e.args[g].size()) != shape->groups[g])
        fail(name, name.text + " expects " + std::to_string(shape->groups[g]) + " argument(s)");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string obj_str(const Composition& c) { return "(" + join(c) + ")"; }

Morphism atom(const Expr& e) {
  const auto& g = e.args;
  auto positive = [&](int v) {
    if (v < 1) throw DslError("boundary", e.pos, e.name + ": thicknesses must be positive");
    return v;
  };
  try {
    if (e.name == "id") {
      for (int v : g[0]) positive(v);
      return Morphism::identity(g[0]);
    }
    if (e.name == "merge") return make({Gen::Merge, positive(g[0][0]), positive(g[0][1])});
    if (e.name == "split") return make({Gen::Split, positive(g[0][0]), positive(g[0][1])});
    if (e.name == "cross") return make({Gen::Cross, positive(g[0][0]), positive(g[0][1])});
    if (e.name == "wdot") return make({Gen::WDot, positive(g[0][0]), 0});
    if (e.name == "bdot") return make({Gen::BDot, positive(g[0][0]), 0});
    if (e.name == "omega") return omega(positive(g[0][0]), g[0][1]);
    if (e.name == "omegac") return omega_circ(positive(g[0][0]), g[0][1]);
    if (e.name == "packet") return packet(positive(g[0][0]), sort_desc(g[1]), sort_desc(g[2]));
  } catch (const DslError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw DslError("boundary", e.pos, ex.what());
  }
  throw DslError("syntax", e.pos, "unknown generator '" + e.name + "'");
}

}  // namespace

std::string Expr::str() const {
  switch (kind) {
    case Kind::Atom: {
      std::string s = name + "(";
      for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ";" : "") + join(args[i]);
      return s + ")";
    }
    case Kind::Scale: return "(" + factor.str() + " " + children[0].str() + ")";
    default: break;
  }
  const char* op = kind == Kind::Compose ? ";" : kind == Kind::Tensor ? "*" : kind == Kind::Add ? "+" : "-";
  return std::string("(") + op + " " + children[0].str() + " " + children[1].str() + ")";
}

Expr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

Morphism elaborate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Atom: return atom(e);
    case Expr::Kind::Scale: return elaborate(e.children[0]) * e.factor;
    case Expr::Kind::Tensor: return tensor(elaborate(e.children[0]), elaborate(e.children[1]));
    case Expr::Kind::Compose: {
      Morphism f = elaborate(e.children[0]), g = elaborate(e.children[1]);
      if (f.src() != g.tgt())
        throw DslError("boundary", e.pos,
                       "cannot compose: the lower diagram ends at " + obj_str(g.tgt()) +
                           " but the upper one starts at " + obj_str(f.src()));
      return compose(f, g);
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Morphism f = elaborate(e.children[0]), g = elaborate(e.children[1]);
      if (f.src() != g.src() || f.tgt() != g.tgt())
        throw DslError("boundary", e.pos,
                       "cannot add " + obj_str(f.src()) + "->" + obj_str(f.tgt()) + " and " +
                           obj_str(g.src()) + "->" + obj_str(g.tgt()));
      return e.kind == Expr::Kind::Add ? f + g : f - g;
    }
  }
  throw DslError("syntax", e.pos, "malformed expression");
}

}  // namespace qweb::cli
