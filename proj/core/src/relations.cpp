// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// The relation library.  Each suite lists both sides of its defining or
// derived identities, instantiated over every admissible choice of
// thicknesses with source weight at most the bound.  Names carry the
// instantiation so a failing check points at a single identity.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qweb/webterm.hpp"

namespace qweb {

namespace {

using Rels = std::vector<Relation>;

std::string args(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s = "(";
  bool first = true;
  for (auto [k, v] : kv) {
    if (!first) s += ",";
    first = false;
    s += k;
    s += "=";
    s += std::to_string(v);
  }
  return s + ")";
}

Scalar mpz_scalar(const mpz_class& z) { return Scalar(mpq_class(z)); }

Morphism ids(int a) { return id({a}); }
Morphism ids(int a, int b) { return id({a, b}); }

// ---- Def 2.1 and its immediate consequences ------------------------------------

void web_basic(Rels& out, int N) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      for (int c = 1; a + b + c <= N; ++c) {
        out.push_back({"merge-assoc" + args({{"a", a}, {"b", b}, {"c", c}}),
                       compose(merge(a + b, c), tensor(merge(a, b), ids(c))),
                       compose(merge(a, b + c), tensor(ids(a), merge(b, c)))});
        out.push_back({"split-coassoc" + args({{"a", a}, {"b", b}, {"c", c}}),
                       compose(tensor(split(a, b), ids(c)), split(a + b, c)),
                       compose(tensor(ids(a), split(b, c)), split(a, b + c))});
      }

  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      out.push_back({"binomial" + args({{"a", a}, {"b", b}}), compose(merge(a, b), split(a, b)),
                     ids(a + b) * mpz_scalar(binomial(a + b, a))});

  // Square switch: split(b,d) o merge(a,c) as a sum of ladder diagrams.
  for (int a = 1; a <= N; ++a)
    for (int c = 1; a + c <= N; ++c)
      for (int b = 1; b < a + c; ++b) {
        int d = a + c - b;
        Morphism rhs(Composition{a, c}, Composition{b, d});
        for (int s = 0; s <= std::min(a, b); ++s) {
          int t = s + d - a;
          if (t < 0 || t > std::min(c, d)) continue;
          rhs += chain({tensor(merge(s, c - t), merge(a - s, t)),
                        tensor_all({ids(s), cross(a - s, c - t), ids(t)}),
                        tensor(split(s, a - s), split(c - t, t))});
        }
        out.push_back({"merge-split" + args({{"a", a}, {"c", c}, {"b", b}, {"d", d}}),
                       compose(split(b, d), merge(a, c)), rhs});
      }

  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b) {
      out.push_back({"swallow-merge" + args({{"a", a}, {"b", b}}),
                     compose(merge(b, a), cross(a, b)), merge(a, b)});
      out.push_back({"swallow-split" + args({{"a", a}, {"b", b}}),
                     compose(cross(b, a), split(b, a)), split(a, b)});
      out.push_back({"cross-involution" + args({{"a", a}, {"b", b}}),
                     compose(cross(b, a), cross(a, b)), ids(a, b)});
    }

  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      for (int c = 1; a + b + c <= N; ++c) {
        auto tag = args({{"a", a}, {"b", b}, {"c", c}});
        // A strand of thickness a crossing a strand that splits into (b, c).
        out.push_back({"slider-split-left" + tag,
                       compose(tensor(ids(a), split(b, c)), cross(b + c, a)),
                       chain({tensor(cross(b, a), ids(c)), tensor(ids(b), cross(c, a)),
                              tensor(split(b, c), ids(a))})});
        out.push_back({"slider-split-right" + tag,
                       compose(tensor(split(a, b), ids(c)), cross(c, a + b)),
                       chain({tensor(ids(a), cross(c, b)), tensor(cross(c, a), ids(b)),
                              tensor(ids(c), split(a, b))})});
        out.push_back({"slider-merge-left" + tag,
                       compose(cross(a, b + c), tensor(ids(a), merge(b, c))),
                       chain({tensor(merge(b, c), ids(a)), tensor(ids(b), cross(a, c)),
                              tensor(cross(a, b), ids(c))})});
        out.push_back({"slider-merge-right" + tag,
                       compose(cross(a + b, c), tensor(merge(a, b), ids(c))),
                       chain({tensor(ids(c), merge(a, b)), tensor(cross(a, c), ids(b)),
                              tensor(ids(a), cross(b, c))})});
        out.push_back({"braid" + tag,
                       chain({tensor(cross(b, c), ids(a)), tensor(ids(b), cross(a, c)),
                              tensor(cross(a, b), ids(c))}),
                       chain({tensor(ids(c), cross(a, b)), tensor(cross(a, c), ids(b)),
                              tensor(ids(a), cross(b, c))})});
      }
}

// ---- White dots ---------------------------------------------------------------------

void qweb_white(Rels& out, int N) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b) {
      auto tag = args({{"a", a}, {"b", b}});
      out.push_back({"wdot-cross-right" + tag, compose(tensor(wdot(b), ids(a)), cross(a, b)),
                     compose(cross(a, b), tensor(ids(a), wdot(b)))});
      out.push_back({"wdot-cross-left" + tag, compose(cross(a, b), tensor(wdot(a), ids(b))),
                     compose(tensor(ids(b), wdot(a)), cross(a, b))});
      out.push_back({"wdot-split" + tag, compose(split(a, b), wdot(a + b)),
                     compose(tensor(wdot(a), ids(b)), split(a, b)) +
                         compose(tensor(ids(a), wdot(b)), split(a, b))});
      out.push_back({"wdot-merge" + tag, compose(wdot(a + b), merge(a, b)),
                     compose(merge(a, b), tensor(wdot(a), ids(b))) +
                         compose(merge(a, b), tensor(ids(a), wdot(b)))});
    }
  for (int a = 1; a <= N; ++a)
    out.push_back({"double-wdot" + args({{"a", a}}), compose(wdot(a), wdot(a)),
                   ids(a) * Scalar(a)});
  for (int a = 2; a <= N; ++a) {
    auto tag = args({{"a", a}});
    out.push_back({"one-wdot-left" + tag,
                   chain({merge(1, a - 1), tensor(wdot(1), ids(a - 1)), split(1, a - 1)}),
                   wdot(a)});
    out.push_back({"one-wdot-right" + tag,
                   chain({merge(a - 1, 1), tensor(ids(a - 1), wdot(1)), split(a - 1, 1)}),
                   wdot(a)});
  }
}

// ---- Black dots ---------------------------------------------------------------------

// The square (a, b) -> (b, a) with vertical strands of thickness t and
// diagonals a-t (from the left) and b-t (from the right).  `middle` acts on
// (t, a-t, b-t, t) -> (t, b-t, a-t, t).
Morphism square(int a, int b, int t, const Morphism& middle) {
  return chain({tensor(merge(t, b - t), merge(a - t, t)), middle,
                tensor(split(t, a - t), split(b - t, t))});
}

Morphism ww(int x, int y) { return tensor(wdot(x), wdot(y)); }

void qweb_affine(Rels& out, int N) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b) {
      auto tag = args({{"a", a}, {"b", b}});
      // Black dot on the b-strand after the crossing (a,b).
      {
        Morphism rhs(Composition{a, b}, Composition{b, a});
        for (int t = 0; t <= std::min(a, b); ++t) {
          Morphism mid = compose(tensor_all({ids(t), cross(a - t, b - t), ids(t)}),
                                 tensor_all({ids(t), ids(a - t), bdot(b - t), ids(t)}));
          rhs += square(a, b, t, mid) * mpz_scalar(factorial(t));
          if (t >= 1) {
            Morphism midw = compose(tensor_all({wdot(t), ids(b - t), ids(a - t), wdot(t)}), mid);
            rhs -= square(a, b, t, midw) * mpz_scalar(factorial(t - 1));
          }
        }
        out.push_back({"bdot-cross-top" + tag, compose(tensor(bdot(b), ids(a)), cross(a, b)), rhs});
      }
      // Black dot on the b-strand before the crossing (b,a).
      {
        Morphism rhs(Composition{b, a}, Composition{a, b});
        for (int t = 0; t <= std::min(a, b); ++t) {
          Morphism mid = compose(tensor_all({ids(t), ids(a - t), bdot(b - t), ids(t)}),
                                 tensor_all({ids(t), cross(b - t, a - t), ids(t)}));
          rhs += square(b, a, t, mid) * mpz_scalar(factorial(t));
          if (t >= 1) {
            Morphism midw = compose(tensor_all({wdot(t), ids(a - t), ids(b - t), wdot(t)}), mid);
            rhs += square(b, a, t, midw) * mpz_scalar(factorial(t - 1));
          }
        }
        out.push_back({"bdot-cross-bottom" + tag, compose(cross(b, a), tensor(bdot(b), ids(a))),
                       rhs});
      }
      out.push_back({"bdot-split" + tag, compose(split(a, b), bdot(a + b)),
                     compose(tensor(bdot(a), bdot(b)), split(a, b))});
      out.push_back({"bdot-merge" + tag, compose(bdot(a + b), merge(a, b)),
                     compose(merge(a, b), tensor(bdot(a), bdot(b)))});
    }
  for (int a = 1; a <= N; ++a) {
    auto tag = args({{"a", a}});
    out.push_back({"balloon" + tag, dotted_balloon(a),
                   bdot(a) * mpz_scalar(factorial(a))});
    out.push_back({"wdot-bdot" + tag, compose(wdot(a), bdot(a)), -compose(bdot(a), wdot(a))});
  }
}

// ---- Derived identities that hold exactly ----------------------------------------------

void derived_exact(Rels& out, int N) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      out.push_back({"two-white-balloon" + args({{"a", a}, {"b", b}}),
                     chain({merge(a, b), ww(a, b), split(a, b)}), Morphism({a + b}, {a + b})});
  if (N >= 2) {
    Morphism sm = compose(split(1, 1), merge(1, 1));
    out.push_back({"four-wdot", chain({ww(1, 1), sm, ww(1, 1)}), sm - ids(1, 1) * Scalar(2)});
  }
  for (int k = 1; k <= N; ++k) {
    for (int a = 0; a < k; ++a) {
      auto tag = args({{"k", k}, {"a", a}});
      out.push_back({"dots-ball-wdot" + tag, compose(wdot(k), omega_circ(k, a)),
                     compose(omega_circ(k, a), wdot(k))});
      out.push_back({"dots-ball-bdot" + tag, compose(bdot(k), omega_circ(k, a)),
                     -compose(omega_circ(k, a), bdot(k))});
    }
    for (int a = 0; a <= k; ++a) {
      auto tag = args({{"k", k}, {"a", a}});
      out.push_back({"dots-ball-omega-anti" + tag, compose(wdot(k), omega(k, a)),
                     -compose(omega(k, a), wdot(k)) + omega_circ(k, a) * Scalar(2)});
      Morphism leg = chain({merge(a, k - a), tensor(compose(wdot(a), bdot(a)), ids(k - a)),
                            split(a, k - a)});
      out.push_back({"dots-ball-omega-comm" + tag, compose(wdot(k), omega(k, a)),
                     compose(omega(k, a), wdot(k)) + leg * Scalar(2)});
      for (int r = 0; r <= k; ++r)
        out.push_back({"omega-commute" + args({{"k", k}, {"a", a}, {"r", r}}),
                       compose(omega(k, a), omega(k, r)), compose(omega(k, r), omega(k, a))});
    }
  }
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      for (int r = 0; r <= a; ++r)
        out.push_back({"omega-wdot-balloon" + args({{"a", a}, {"b", b}, {"r", r}}),
                       chain({merge(a, b), tensor(omega(a, r), wdot(b)), split(a, b)}),
                       omega_circ(a + b, r) * mpz_scalar(binomial(a + b - r - 1, b - 1))});
  for (int a = 2; a <= N; ++a)
    for (int r = 0; r < a; ++r)
      out.push_back({"omega-circ-thin-leg" + args({{"a", a}, {"r", r}}), omega_circ(a, r),
                     chain({merge(a - 1, 1), tensor(omega(a - 1, r), wdot(1)), split(a - 1, 1)})});
  // Exact push of omega_r through a merge or a split.
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      for (int r = 0; r <= a + b; ++r) {
        auto tag = args({{"a", a}, {"b", b}, {"r", r}});
        Morphism rm({a, b}, {a + b}), rs({a + b}, {a, b});
        for (int c = 0; c <= r; ++c)
          for (int d = 0; c + d <= r; ++d) {
            int t = r - c - d;
            Scalar co = mpz_scalar(factorial(t) * binomial(a - c, t) * binomial(b - d, t));
            if (!co.is_zero()) {
              rm += compose(merge(a, b), tensor(omega(a, c), omega(b, d))) * co;
              rs += compose(tensor(omega(a, c), omega(b, d)), split(a, b)) * co;
            }
            if (t >= 1) {
              Scalar cp = mpz_scalar(factorial(t - 1) * binomial(a - c - 1, t - 1) *
                                     binomial(b - d - 1, t - 1));
              if (!cp.is_zero()) {
                rm -= compose(merge(a, b), tensor(omega_circ(a, c), omega_circ(b, d))) * cp;
                rs += compose(tensor(omega_circ(a, c), omega_circ(b, d)), split(a, b)) * cp;
              }
            }
          }
        out.push_back({"omega-through-merge" + tag, compose(omega(a + b, r), merge(a, b)), rm});
        out.push_back({"omega-through-split" + tag, compose(split(a, b), omega(a + b, r)), rs});
      }
}

// ---- Characteristic-zero presentations ----------------------------------------------

Morphism thin_cross_by_merge() { return compose(split(1, 1), merge(1, 1)) - ids(1, 1); }

// The thick crossing written with merges, splits and thin crossings.
Morphism crossing_from_thin(int a, int b, const Morphism& thin) {
  Scalar k = Scalar(1) / mpz_scalar(factorial(a) * factorial(b));
  return chain({tensor(merge_full(b), merge_full(a)), thin_block_swap(a, b, thin),
                tensor(split_full(a), split_full(b))}) *
         k;
}

// Replace every crossing by its merge/split expression.
Morphism without_crossings(const Morphism& f) {
  Morphism thin = thin_cross_by_merge();
  return substitute(f, [&](const Generator& g) -> std::optional<Morphism> {
    if (g.kind != Gen::Cross) return std::nullopt;
    return crossing_from_thin(g.a, g.b, thin);
  });
}

void char0_qweb(Rels& out, int N) {
  if (N >= 2) {
    out.push_back({"thin-crossing", cross(1, 1), thin_cross_by_merge()});
    Morphism sm = compose(split(1, 1), merge(1, 1));
    out.push_back({"merge-split-thin", sm - chain({ww(1, 1), sm, ww(1, 1)}),
                   ids(1, 1) * Scalar(2)});
  }
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b) {
      auto tag = args({{"a", a}, {"b", b}});
      out.push_back({"thick-crossing" + tag, cross(a, b),
                     crossing_from_thin(a, b, thin_cross_by_merge())});
      Morphism rungs(Composition{a, b}, Composition{b, a});
      for (int t = 0; t <= std::min(a, b); ++t) {
        // Move b-t to the left, then a-t back to the right.
        Morphism term = compose(rung_right(a + b - t, t, a - t), rung_left(a, b, b - t));
        rungs += (t % 2 ? -term : term);
      }
      out.push_back({"crossing-by-rungs" + tag, cross(a, b), rungs});

      Morphism up = rung_left(a - 1, b + 1, 1), down = rung_right(a, b, 1);
      Morphism up2 = rung_left(a, b, 1), down2 = rung_right(a + 1, b - 1, 1);
      out.push_back({"rung-swap" + tag, compose(up, down) - compose(down2, up2),
                     ids(a, b) * Scalar(a - b)});
      Morphism upw = rung_left(a - 1, b + 1, 1, true), downw = rung_right(a, b, 1, true);
      Morphism up2w = rung_left(a, b, 1, true), down2w = rung_right(a + 1, b - 1, 1, true);
      Morphism wdiff = tensor(wdot(a), ids(b)) - tensor(ids(a), wdot(b));
      out.push_back({"rung-swap-wdot-upper" + tag, compose(upw, down) - compose(down2, up2w),
                     wdiff});
      out.push_back({"rung-swap-wdot-lower" + tag, compose(up, downw) - compose(down2w, up2),
                     wdiff});
    }
  for (int a = 1; a <= N; ++a)
    for (int b = 1; a + b <= N; ++b)
      for (int c = 1; a + b + c <= N; ++c) {
        auto tag = args({{"a", a}, {"b", b}, {"c", c}});
        auto e21 = [&](int x, int y, int z, bool w) { return tensor(rung_left(x, y, 1, w), ids(z)); };
        auto e32 = [&](int x, int y, int z, bool w) { return tensor(ids(x), rung_left(y, z, 1, w)); };
        // E21 E32 - E32 E21 on (a,b,c) -> (a+1, b, c-1).
        Morphism e21e32 = compose(e21(a, b + 1, c - 1, false), e32(a, b, c, false));
        Morphism e32e21 = compose(e32(a + 1, b - 1, c, false), e21(a, b, c, false));
        Morphism e21e32w = compose(e21(a, b + 1, c - 1, true), e32(a, b, c, true));
        Morphism e32e21w = compose(e32(a + 1, b - 1, c, true), e21(a, b, c, true));
        out.push_back({"wdot-rung-1" + tag, e21e32 - e32e21, e21e32w + e32e21w});
        Morphism l2 = compose(e21(a, b + 1, c - 1, false), e32(a, b, c, true)) -
                      compose(e32(a + 1, b - 1, c, true), e21(a, b, c, false));
        Morphism r2 = compose(e21(a, b + 1, c - 1, true), e32(a, b, c, false)) -
                      compose(e32(a + 1, b - 1, c, false), e21(a, b, c, true));
        out.push_back({"wdot-rung-2" + tag, l2, r2});
      }
  // The defining relations of the integral category survive once every
  // crossing is rewritten through merges and splits.
  Rels base;
  web_basic(base, N);
  qweb_white(base, N);
  for (const Relation& r : base)
    out.push_back({r.name + "[no-cross]", without_crossings(r.lhs), without_crossings(r.rhs)});
}

void char0_affine(Rels& out, int N) {
  if (N >= 2) {
    Morphism x1 = tensor(bdot(1), ids(1)), x2 = tensor(ids(1), bdot(1));
    Morphism s = cross(1, 1), e = ids(1, 1), w = ww(1, 1);
    out.push_back({"thin-bdot-cross-top", compose(x1, s), compose(s, x2) + e - w});
    out.push_back({"thin-bdot-cross-bottom", compose(s, x1), compose(x2, s) + e + w});
  }
  if (N >= 1)
    out.push_back({"thin-wdot-bdot", compose(wdot(1), bdot(1)), -compose(bdot(1), wdot(1))});
  for (int a = 2; a <= N; ++a)
    out.push_back({"bdot-as-balloon" + args({{"a", a}}), bdot(a), dotted_balloon(a) * (Scalar(1) / mpz_scalar(factorial(a)))});
  Rels base;
  qweb_affine(base, N);
  for (const Relation& r : base)
    out.push_back({r.name + "[thin-dots]", thin_black_dots(r.lhs), thin_black_dots(r.rhs)});
}

}  // namespace

const std::vector<std::string>& relation_suite_names() {
  static const std::vector<std::string> names = {"web-basic",     "qweb-white", "qweb-affine",
                                                 "derived-exact", "char0-qweb", "char0-affine"};
  return names;
}

std::vector<Relation> relation_suite(std::string_view name, int bound) {
  Rels out;
  if (name == "web-basic")
    web_basic(out, bound);
  else if (name == "qweb-white")
    qweb_white(out, bound);
  else if (name == "qweb-affine")
    qweb_affine(out, bound);
  else if (name == "derived-exact")
    derived_exact(out, bound);
  else if (name == "char0-qweb")
    char0_qweb(out, bound);
  else if (name == "char0-affine")
    char0_affine(out, bound);
  else
    throw std::invalid_argument("unknown relation suite: " + std::string(name));
  return out;
}

}  // namespace qweb
