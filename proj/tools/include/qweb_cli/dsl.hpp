// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// A small expression language for diagrams.
//
//   atoms     id(2,1)  id()  merge(a,b)  split(a,b)  cross(a,b)  wdot(a)
//             bdot(a)  omega(a,r)  omegac(a,r)  packet(a; nu; eta)
//   scalars   3 f,  1/2 (f),  -f
//   f ; g     f after g: g is drawn below f, so the source of f ; g is the
//             source of g.  This is the categorical composition.
//   f * g     tensor product, f on the left.
//   f + g, f - g
//
// Precedence from loosest to tightest: + and -, then ;, then *, then scalar
// prefixes.  Whitespace and newlines are insignificant; '#' starts a comment
// running to the end of the line.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qweb/scalar.hpp"
#include "qweb/webterm.hpp"

namespace qweb::cli {

struct SourcePos {
  int line = 1;
  int column = 1;
};

// kind() is "syntax" for parse errors and "boundary" for elaboration errors.
class DslError : public std::runtime_error {
 public:
  DslError(std::string kind, SourcePos pos, const std::string& msg);
  const std::string& kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  SourcePos pos_;
  std::string detail_;
};

struct Expr {
  enum class Kind { Atom, Compose, Tensor, Add, Sub, Scale };

  Kind kind = Kind::Atom;
  SourcePos pos;
  std::string name;                    // atoms
  std::vector<std::vector<int>> args;  // atoms: argument groups split by ';'
  Scalar factor;                       // Scale
  std::vector<Expr> children;          // binary nodes have two, Scale one

  // S-expression view, e.g. "(; merge(1,1) split(1,1))".
  std::string str() const;
};

Expr parse(std::string_view text);
// Boundary-checked evaluation into a morphism.
Morphism elaborate(const Expr& e);
inline Morphism parse_morphism(std::string_view text) { return elaborate(parse(text)); }

}  // namespace qweb::cli
