// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/webterm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qweb {

namespace {

std::string comp_str(const Composition& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

Composition concat(const Composition& a, const Composition& b) {
  Composition r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

// ---- Generator ---------------------------------------------------------------

Composition Generator::inputs() const {
  switch (kind) {
    case Gen::Merge:
    case Gen::Cross: return {a, b};
    case Gen::Split: return {a + b};
    default: return {a};
  }
}

Composition Generator::outputs() const {
  switch (kind) {
    case Gen::Merge: return {a + b};
    case Gen::Split: return {a, b};
    case Gen::Cross: return {b, a};
    default: return {a};
  }
}

int Generator::in_arity() const { return (kind == Gen::Merge || kind == Gen::Cross) ? 2 : 1; }
int Generator::out_arity() const { return (kind == Gen::Split || kind == Gen::Cross) ? 2 : 1; }

std::string Generator::str() const {
  switch (kind) {
    case Gen::Merge: return "merge(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Gen::Split: return "split(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Gen::Cross: return "cross(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Gen::WDot: return "wdot(" + std::to_string(a) + ")";
    case Gen::BDot: return "bdot(" + std::to_string(a) + ")";
  }
  return "?";
}

Composition apply_slice(const Composition& obj, const Slice& s) {
  Composition in = s.gen.inputs();
  if (s.pos < 0 || s.pos + static_cast<int>(in.size()) > static_cast<int>(obj.size()) ||
      !std::equal(in.begin(), in.end(), obj.begin() + s.pos))
    throw std::invalid_argument("boundary mismatch: " + s.gen.str() + " at " +
                                std::to_string(s.pos) + " on " + comp_str(obj));
  Composition out(obj.begin(), obj.begin() + s.pos);
  Composition o = s.gen.outputs();
  out.insert(out.end(), o.begin(), o.end());
  out.insert(out.end(), obj.begin() + s.pos + in.size(), obj.end());
  return out;
}

// The heap of slices has a unique lexicographically least linear extension
// once every slice is keyed by (position on the object it acts on, generator):
// among the slices that can be moved to the bottom, two distinct ones act on
// disjoint strands, so their positions differ and the choice is forced.
int canonicalize(const Composition& /*source*/, std::vector<Slice>& slices) {
  std::vector<Slice> rem = std::move(slices);
  std::vector<Slice> out;
  out.reserve(rem.size());
  int swaps = 0;

  // Position of rem[j] after sliding it below rem[0..j-1]; nullopt if blocked.
  auto slide = [&](std::size_t j) -> std::optional<int> {
    int p = rem[j].pos;
    int in = rem[j].gen.in_arity();
    for (std::size_t i = j; i-- > 0;) {
      const Slice& x = rem[i];
      if (p + in <= x.pos) continue;
      if (p >= x.pos + x.gen.out_arity()) {
        p = p - x.gen.out_arity() + x.gen.in_arity();
        continue;
      }
      return std::nullopt;
    }
    return p;
  };

  while (!rem.empty()) {
    std::size_t best = rem.size();
    std::tuple<int, Generator> best_key{};
    for (std::size_t j = 0; j < rem.size(); ++j) {
      auto p = slide(j);
      if (!p) continue;
      std::tuple<int, Generator> key{*p, rem[j].gen};
      if (best == rem.size() || key < best_key) {
        best = j;
        best_key = key;
      }
    }
    // Perform the slide, updating the positions of the slices passed over.
    Slice y = rem[best];
    int in = y.gen.in_arity(), outa = y.gen.out_arity();
    for (std::size_t i = best; i-- > 0;) {
      Slice& x = rem[i];
      if (y.pos + in <= x.pos) {
        x.pos = x.pos - in + outa;
      } else {
        y.pos = y.pos - x.gen.out_arity() + x.gen.in_arity();
      }
      swaps += y.gen.parity() * x.gen.parity();
    }
    out.push_back(y);
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(best));
  }
  slices = std::move(out);
  return (swaps & 1) ? -1 : 1;
}

// ---- DiagramTerm -------------------------------------------------------------

DiagramTerm::DiagramTerm(Composition source, std::vector<Slice> slices)
    : source_(std::move(source)), slices_(std::move(slices)) {
  for (int p : source_)
    if (p <= 0) throw std::invalid_argument("objects must be strict compositions");
  Composition cur = source_;
  for (const Slice& s : slices_) cur = apply_slice(cur, s);
  target_ = std::move(cur);
}

int DiagramTerm::parity() const {
  int p = 0;
  for (const Slice& s : slices_) p ^= s.gen.parity();
  return p;
}

int DiagramTerm::degree() const {
  int d = 0;
  for (const Slice& s : slices_) d += s.gen.degree();
  return d;
}

std::string DiagramTerm::str() const {
  std::string s = comp_str(source_);
  for (const Slice& sl : slices_) s += " " + sl.gen.str() + "@" + std::to_string(sl.pos);
  return s;
}

// ---- Morphism ----------------------------------------------------------------

Morphism::Morphism(Composition src, Composition tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

Morphism Morphism::identity(const Composition& obj) {
  Morphism m(obj, obj);
  m.terms_.emplace(DiagramTerm(obj, {}), Scalar(1));
  return m;
}

Morphism Morphism::from_slices(const Composition& src, std::vector<Slice> slices, const Scalar& c) {
  DiagramTerm raw(src, slices);  // validates
  int sign = canonicalize(src, slices);
  DiagramTerm t(src, std::move(slices));
  Morphism m(src, t.target());
  m.add_term(t, sign < 0 ? -c : c);
  return m;
}

std::optional<int> Morphism::parity() const {
  std::optional<int> p;
  for (const auto& [t, c] : terms_) {
    int q = t.parity();
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

int Morphism::degree() const {
  int d = -1;
  for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
  return d;
}

Morphism Morphism::parity_part(int p) const {
  Morphism m(src_, tgt_);
  for (const auto& [t, c] : terms_)
    if (t.parity() == (p & 1)) m.terms_.emplace(t, c);
  return m;
}

Morphism Morphism::degree_part(int d) const {
  Morphism m(src_, tgt_);
  for (const auto& [t, c] : terms_)
    if (t.degree() == d) m.terms_.emplace(t, c);
  return m;
}

void Morphism::add_term(const DiagramTerm& t, const Scalar& c) {
  if (c.is_zero()) return;
  if (t.source() != src_ || t.target() != tgt_)
    throw std::invalid_argument("term boundary differs from morphism boundary");
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Morphism::check_same_boundary(const Morphism& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_)
    throw std::invalid_argument("boundary mismatch: " + comp_str(src_) + "->" + comp_str(tgt_) +
                                " vs " + comp_str(o.src_) + "->" + comp_str(o.tgt_));
}

Morphism& Morphism::operator+=(const Morphism& o) {
  check_same_boundary(o);
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  check_same_boundary(o);
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Morphism& Morphism::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, x] : terms_) x *= c;
  return *this;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.terms_ == b.terms_;
}

std::string Morphism::str() const {
  if (terms_.empty()) return "0 : " + comp_str(src_) + " -> " + comp_str(tgt_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << t.str();
  }
  return os.str();
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.src() != g.tgt())
    throw std::invalid_argument("boundary mismatch in composition: " + comp_str(g.tgt()) + " vs " +
                                comp_str(f.src()));
  Morphism out(g.src(), f.tgt());
  for (const auto& [tg, cg] : g.terms()) {
    for (const auto& [tf, cf] : f.terms()) {
      std::vector<Slice> s = tg.slices();
      s.insert(s.end(), tf.slices().begin(), tf.slices().end());
      int sign = canonicalize(g.src(), s);
      Scalar c = cf * cg;
      out.add_term(DiagramTerm(g.src(), std::move(s)), sign < 0 ? -c : c);
    }
  }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Composition src = concat(f.src(), g.src());
  Composition tgt = concat(f.tgt(), g.tgt());
  Morphism out(src, tgt);
  const int shift = static_cast<int>(f.src().size());
  for (const auto& [tf, cf] : f.terms()) {
    for (const auto& [tg, cg] : g.terms()) {
      std::vector<Slice> s;
      s.reserve(tf.slices().size() + tg.slices().size());
      for (Slice x : tg.slices()) {
        x.pos += shift;
        s.push_back(x);
      }
      s.insert(s.end(), tf.slices().begin(), tf.slices().end());
      int sign = canonicalize(src, s);
      Scalar c = cf * cg;
      out.add_term(DiagramTerm(src, std::move(s)), sign < 0 ? -c : c);
    }
  }
  return out;
}

Morphism chain(std::initializer_list<Morphism> fs) {
  if (fs.size() == 0) throw std::invalid_argument("chain of nothing");
  auto it = std::rbegin(fs);
  Morphism acc = *it++;
  for (; it != std::rend(fs); ++it) acc = compose(*it, acc);
  return acc;
}

Morphism tensor_all(std::initializer_list<Morphism> fs) {
  Morphism acc = Morphism::identity({});
  for (const Morphism& f : fs) acc = tensor(acc, f);
  return acc;
}

Morphism flip_div(const Morphism& f) {
  Morphism out(f.tgt(), f.src());
  for (const auto& [t, c] : f.terms()) {
    std::vector<Slice> s(t.slices().rbegin(), t.slices().rend());
    for (Slice& x : s) {
      if (x.gen.kind == Gen::Merge)
        x.gen.kind = Gen::Split;
      else if (x.gen.kind == Gen::Split)
        x.gen.kind = Gen::Merge;
      else if (x.gen.kind == Gen::Cross)
        std::swap(x.gen.a, x.gen.b);
    }
    int sign = canonicalize(f.tgt(), s);
    out.add_term(DiagramTerm(f.tgt(), std::move(s)), sign < 0 ? -c : c);
  }
  return out;
}

Morphism substitute(const Morphism& f,
                    const std::function<std::optional<Morphism>(const Generator&)>& rule) {
  Morphism out(f.src(), f.tgt());
  for (const auto& [t, c] : f.terms()) {
    Morphism acc = Morphism::identity(t.source()) * c;
    Composition cur = t.source();
    for (const Slice& s : t.slices()) {
      Composition next = apply_slice(cur, s);
      auto rep = rule(s.gen);
      Morphism piece = rep ? *rep : make(s.gen);
      if (piece.src() != s.gen.inputs() || piece.tgt() != s.gen.outputs())
        throw std::invalid_argument("substitution changes the boundary of " + s.gen.str());
      Composition left(cur.begin(), cur.begin() + s.pos);
      Composition right(cur.begin() + s.pos + s.gen.in_arity(), cur.end());
      acc = compose(tensor_all({Morphism::identity(left), piece, Morphism::identity(right)}), acc);
      cur = std::move(next);
    }
    out += acc;
  }
  return out;
}

// ---- Builders ------------------------------------------------------------------

Morphism make(const Generator& g) {
  if (g.a <= 0 || (g.in_arity() + g.out_arity() > 2 && g.b <= 0))
    throw std::invalid_argument("generator thickness must be positive: " + g.str());
  Generator h = g;
  if (h.kind == Gen::WDot || h.kind == Gen::BDot) h.b = 0;
  return Morphism::from_slices(h.inputs(), {Slice{0, h}});
}

namespace {
void check_nonneg(int a, int b = 0) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
}
}  // namespace

Morphism id(const Composition& obj) {
  for (int p : obj) check_nonneg(p);
  return Morphism::identity(strip_zeros(obj));
}

Morphism merge(int a, int b) {
  check_nonneg(a, b);
  if (a == 0 || b == 0) return id({a + b});
  return make({Gen::Merge, a, b});
}

Morphism split(int a, int b) {
  check_nonneg(a, b);
  if (a == 0 || b == 0) return id({a + b});
  return make({Gen::Split, a, b});
}

Morphism cross(int a, int b) {
  check_nonneg(a, b);
  if (a == 0 || b == 0) return id({a + b});
  return make({Gen::Cross, a, b});
}

Morphism wdot(int a) {
  check_nonneg(a);
  if (a == 0) return Morphism({}, {});
  return make({Gen::WDot, a, 0});
}

Morphism bdot(int a) {
  check_nonneg(a);
  if (a == 0) return id({});
  return make({Gen::BDot, a, 0});
}

Morphism merge_full(int a) {
  check_nonneg(a);
  Morphism m = id({a == 0 ? 0 : 1});
  for (int k = 1; k < a; ++k) m = compose(merge(k, 1), tensor(m, id({1})));
  return m;
}

Morphism split_full(int a) {
  check_nonneg(a);
  Morphism m = id({a == 0 ? 0 : 1});
  for (int k = 1; k < a; ++k) m = compose(tensor(id({1}), m), split(1, k));
  return m;
}

Morphism dotted_balloon(int a) {
  check_nonneg(a);
  Morphism dots = id({});
  for (int i = 0; i < a; ++i) dots = tensor(dots, bdot(1));
  return chain({merge_full(a), dots, split_full(a)});
}

Morphism thin_black_dots(const Morphism& f) {
  return substitute(f, [](const Generator& g) -> std::optional<Morphism> {
    if (g.kind != Gen::BDot || g.a == 1) return std::nullopt;
    return dotted_balloon(g.a) * (Scalar(1) / Scalar(mpq_class(factorial(g.a))));
  });
}

Morphism merge_full(const Composition& mu) {
  Morphism m = id({});
  for (int p : mu) m = tensor(m, merge_full(p));
  return m;
}

Morphism split_full(const Composition& mu) {
  Morphism m = id({});
  for (int p : mu) m = tensor(m, split_full(p));
  return m;
}

Morphism rung_left(int x, int y, int t, bool white) {
  check_nonneg(x, y);
  if (t < 0 || t > y) throw std::invalid_argument("rung thickness out of range");
  if (white && t != 1) throw std::invalid_argument("white rungs are thin");
  Morphism lower = tensor(id({x}), split(t, y - t));
  if (white) lower = compose(tensor_all({id({x}), wdot(1), id({y - 1})}), lower);
  return compose(tensor(merge(x, t), id({y - t})), lower);
}

Morphism rung_right(int x, int y, int t, bool white) {
  check_nonneg(x, y);
  if (t < 0 || t > x) throw std::invalid_argument("rung thickness out of range");
  if (white && t != 1) throw std::invalid_argument("white rungs are thin");
  Morphism lower = tensor(split(x - t, t), id({y}));
  if (white) lower = compose(tensor_all({id({x - 1}), wdot(1), id({y})}), lower);
  return compose(tensor(id({x - t}), merge(t, y)), lower);
}

Morphism thin_block_swap(int a, int b, const Morphism& thin_cross) {
  const int m = a + b;
  Morphism acc = id(Composition(static_cast<std::size_t>(m), 1));
  // Move the strands of the a-block across the b-block, rightmost first.
  for (int i = a - 1; i >= 0; --i) {
    for (int p = i; p < i + b; ++p) {
      Morphism layer = tensor_all({id(Composition(static_cast<std::size_t>(p), 1)), thin_cross,
                                   id(Composition(static_cast<std::size_t>(m - p - 2), 1))});
      acc = compose(layer, acc);
    }
  }
  return acc;
}

// ---- Dot elements ----------------------------------------------------------------

Morphism omega(int a, int r) {
  if (a < 0) throw std::invalid_argument("negative thickness");
  if (r < 0 || r > a) return Morphism(strip_zeros({a}), strip_zeros({a}));
  if (r == 0) return id({a});
  if (r == a) return bdot(a);
  return chain({merge(r, a - r), tensor(bdot(r), id({a - r})), split(r, a - r)});
}

Morphism omega_circ(int a, int r) {
  if (a < 0) throw std::invalid_argument("negative thickness");
  if (r < 0 || r >= a) return Morphism(strip_zeros({a}), strip_zeros({a}));
  return chain({merge(r, a - r), tensor(bdot(r), wdot(a - r)), split(r, a - r)});
}

Morphism omega_nu(int a, const Partition& nu) {
  Morphism m = id({a});
  for (int r : nu) m = compose(m, omega(a, r));
  return m;
}

Morphism packet(int a, const Partition& nu, const Partition& eta) {
  if (!is_strict_partition(nu) || (!nu.empty() && nu.front() > a))
    throw std::invalid_argument("packet: nu must be strict with parts <= a");
  if (!is_partition(eta) || (!eta.empty() && eta.front() > a))
    throw std::invalid_argument("packet: eta must be a partition with parts <= a");
  Morphism m = id({a});
  for (int p : nu) m = compose(m, omega_circ(a, p - 1));
  return compose(m, omega_nu(a, eta));
}

}  // namespace qweb
