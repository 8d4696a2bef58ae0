// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/normalform.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qweb/linalg.hpp"

namespace qweb {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int decor_degree(const LegDecor& d) {
  int deg = weight(d.eta);
  for (int p : d.nu) deg += p - 1;
  return deg;
}

bool trivial(const LegDecor& d) { return d.nu.empty() && d.eta.empty(); }

}  // namespace

// ---- ElementaryCFD ----------------------------------------------------------------

ElementaryCFD::ElementaryCFD(IntMatrix a, std::map<std::pair<int, int>, LegDecor> decor)
    : a_(std::move(a)) {
  std::size_t cols = a_.empty() ? 0 : a_[0].size();
  for (const auto& row : a_) {
    if (row.size() != cols) throw std::invalid_argument("ElementaryCFD: ragged matrix");
    for (int x : row)
      if (x < 0) throw std::invalid_argument("ElementaryCFD: negative entry");
  }
  for (const auto& [ij, d] : decor) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= static_cast<int>(a_.size()) || j >= static_cast<int>(cols) ||
        a_[i][j] == 0)
      throw std::invalid_argument("ElementaryCFD: decoration on a zero entry");
    int t = a_[i][j];
    if (!is_strict_partition(d.nu) || (!d.nu.empty() && (d.nu.front() > t || d.nu.back() < 1)))
      throw std::invalid_argument("ElementaryCFD: nu must be strict with parts in 1..a_ij");
    if (!is_partition(d.eta) || (!d.eta.empty() && d.eta.front() > t))
      throw std::invalid_argument("ElementaryCFD: eta must have parts <= a_ij");
    if (!trivial(d)) decor_.emplace(ij, d);
  }
}

LegDecor ElementaryCFD::decor_at(int i, int j) const {
  auto it = decor_.find({i, j});
  return it == decor_.end() ? LegDecor{} : it->second;
}

Composition ElementaryCFD::target() const {
  Composition out;
  for (const auto& row : a_) out.push_back(std::accumulate(row.begin(), row.end(), 0));
  return out;
}

Composition ElementaryCFD::source() const {
  Composition out(a_.empty() ? 0 : a_[0].size(), 0);
  for (const auto& row : a_)
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  return out;
}

int ElementaryCFD::degree() const {
  int d = 0;
  for (const auto& [ij, dec] : decor_) d += decor_degree(dec);
  return d;
}

int ElementaryCFD::parity() const {
  int p = 0;
  for (const auto& [ij, dec] : decor_) p += static_cast<int>(dec.nu.size());
  return p % 2;
}

std::string ElementaryCFD::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a_[i].size(); ++j) s += (j ? "," : "") + std::to_string(a_[i][j]);
    s += "]";
  }
  s += "]";
  for (const auto& [ij, d] : decor_)
    s += " " + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) + ":nu=" + vec_str(d.nu) +
         ",eta=" + vec_str(d.eta);
  return s;
}

// ---- Enumeration ---------------------------------------------------------------------

namespace {

// Decorations of a leg of thickness t with degree exactly e.
std::vector<LegDecor> leg_decors(int t, int e) {
  std::vector<LegDecor> out;
  for (const auto& nu : strict_partitions_bounded(t)) {
    int dn = 0;
    for (int p : nu) dn += p - 1;
    if (dn > e) continue;
    for (const auto& eta : partitions_of(e - dn, t)) out.push_back({nu, eta});
  }
  return out;
}

void assign(const IntMatrix& a, const std::vector<std::pair<int, int>>& legs, std::size_t k,
            int budget, std::map<std::pair<int, int>, LegDecor>& cur,
            std::vector<ElementaryCFD>& out) {
  if (k == legs.size()) {
    out.emplace_back(a, cur);
    return;
  }
  auto [i, j] = legs[k];
  for (int e = 0; e <= budget; ++e)
    for (const auto& d : leg_decors(a[i][j], e)) {
      cur[legs[k]] = d;
      assign(a, legs, k + 1, budget - e, cur, out);
    }
  cur.erase(legs[k]);
}

std::vector<std::pair<int, int>> legs_row_major(const IntMatrix& a) {
  std::vector<std::pair<int, int>> legs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] > 0) legs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return legs;
}

}  // namespace

std::vector<ElementaryCFD> cfd_basis(const Composition& lambda, const Composition& mu, int maxdeg) {
  std::vector<ElementaryCFD> out;
  if (maxdeg < 0 || weight(lambda) != weight(mu)) return out;
  for (const auto& a : enumerate_matrices(lambda, mu)) {
    std::map<std::pair<int, int>, LegDecor> cur;
    assign(a, legs_row_major(a), 0, maxdeg, cur, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const ElementaryCFD& x, const ElementaryCFD& y) {
    return x.degree() < y.degree();
  });
  return out;
}

std::vector<ElementaryCFD> cfd_basis_finite(const Composition& lambda, const Composition& mu) {
  std::vector<ElementaryCFD> out;
  if (weight(lambda) != weight(mu)) return out;
  for (const auto& a : enumerate_matrices(lambda, mu)) {
    auto legs = legs_row_major(a);
    for (unsigned mask = 0; mask < (1u << legs.size()); ++mask) {
      std::map<std::pair<int, int>, LegDecor> dec;
      for (std::size_t k = 0; k < legs.size(); ++k)
        if (mask >> k & 1) dec[legs[k]] = LegDecor{{1}, {}};
      out.emplace_back(a, dec);
    }
  }
  return out;
}

std::vector<std::size_t> graded_dimension(const Composition& lambda, const Composition& mu,
                                          int maxdeg) {
  std::vector<std::size_t> out(std::max(maxdeg + 1, 0), 0);
  for (const auto& c : cfd_basis(lambda, mu, maxdeg)) ++out[c.degree()];
  return out;
}

// ---- Embedding ----------------------------------------------------------------------

namespace {

// Iterated right splits (a) -> (p_1, ..., p_k).
Morphism split_into(const std::vector<int>& parts) {
  if (parts.size() <= 1) return id(parts);
  std::vector<int> rest(parts.begin() + 1, parts.end());
  return compose(tensor(id({parts[0]}), split_into(rest)), split(parts[0], weight(rest)));
}

// Iterated left merges (p_1, ..., p_k) -> (a).
Morphism merge_from(const std::vector<int>& parts) {
  if (parts.size() <= 1) return id(parts);
  std::vector<int> first(parts.begin(), parts.end() - 1);
  return compose(merge(weight(first), parts.back()), tensor(merge_from(first), id({parts.back()})));
}

Composition slice_of(const std::vector<int>& v, std::size_t lo, std::size_t hi) {
  return Composition(v.begin() + lo, v.begin() + hi);
}

}  // namespace

Morphism embed(const ElementaryCFD& c) {
  const IntMatrix& a = c.matrix();
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;

  Morphism bottom = id({});
  std::vector<std::pair<int, int>> legs;  // column-major
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < rows; ++i)
      if (a[i][j] > 0) {
        parts.push_back(a[i][j]);
        legs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    bottom = tensor(bottom, split_into(parts));
  }
  std::vector<int> thick;
  for (auto [i, j] : legs) thick.push_back(a[i][j]);

  Morphism f = bottom;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    LegDecor d = c.decor_at(legs[k].first, legs[k].second);
    if (trivial(d)) continue;
    Morphism p = packet(thick[k], d.nu, d.eta);
    f = compose(tensor_all({id(slice_of(thick, 0, k)), p, id(slice_of(thick, k + 1, thick.size()))}),
                f);
  }

  // Bubble sort the legs from column-major into row-major order.
  auto order = legs;
  for (std::size_t pass = 0; pass < order.size(); ++pass)
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
      if (order[k + 1] < order[k]) {
        Morphism x = tensor_all({id(slice_of(thick, 0, k)), cross(thick[k], thick[k + 1]),
                                 id(slice_of(thick, k + 2, thick.size()))});
        f = compose(x, f);
        std::swap(order[k], order[k + 1]);
        std::swap(thick[k], thick[k + 1]);
      }

  Morphism top = id({});
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<int> parts;
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] > 0) parts.push_back(a[i][j]);
    top = tensor(top, merge_from(parts));
  }
  return compose(top, f);
}

// ---- NormalMorphism -------------------------------------------------------------------

int NormalMorphism::degree() const {
  int d = -1;
  for (const auto& [c, v] : terms_) d = std::max(d, c.degree());
  return d;
}

NormalMorphism NormalMorphism::degree_part(int d) const {
  NormalMorphism out(src_, tgt_);
  for (const auto& [c, v] : terms_)
    if (c.degree() == d) out.terms_.emplace(c, v);
  return out;
}

Scalar NormalMorphism::coeff(const ElementaryCFD& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NormalMorphism::add(const ElementaryCFD& c, const Scalar& v) {
  if (c.source() != src_ || c.target() != tgt_)
    throw std::invalid_argument("NormalMorphism: boundary mismatch");
  if (v.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Morphism NormalMorphism::to_morphism() const {
  Morphism out(src_, tgt_);
  for (const auto& [c, v] : terms_) out += embed(c) * v;
  return out;
}

std::string NormalMorphism::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [c, v] : terms_) s += (s.empty() ? "" : " + ") + ("(" + v.str() + ") " + c.str());
  return s;
}

// ---- Thin explosion -------------------------------------------------------------------

namespace {

std::mutex explode_mutex;

Scalar inverse_factorials(const Composition& obj) {
  mpz_class p = 1;
  for (int x : obj) p *= factorial(x);
  return Scalar(1) / Scalar(mpq_class(p));
}

SergeevElement sym_of_parts(int m, const Composition& obj, std::size_t skip_lo, std::size_t skip_hi,
                            SergeevElement acc) {
  int start = 1;
  for (std::size_t k = 0; k < obj.size(); ++k) {
    if ((k < skip_lo || k >= skip_hi) && obj[k] > 1) acc = multiply(acc, symmetrizer(m, start, obj[k]));
    start += obj[k];
  }
  return acc;
}

SergeevElement explode_slice(const Composition& obj, const Slice& s) {
  static std::map<std::pair<Composition, Slice>, SergeevElement> cache;
  {
    std::lock_guard<std::mutex> lock(explode_mutex);
    auto it = cache.find({obj, s});
    if (it != cache.end()) return it->second;
  }
  int m = weight(obj);
  int st = 1;
  for (int k = 0; k < s.pos; ++k) st += obj[k];
  const Generator& g = s.gen;
  SergeevElement core(m);
  switch (g.kind) {
    case Gen::Merge:
    case Gen::Split:
      core = symmetrizer(m, st, g.a + g.b);
      break;
    case Gen::Cross: {
      PBWMonomial beta = PBWMonomial::one(m);
      for (int j = st; j < st + g.a; ++j) beta.w[j - 1] = j + g.b;
      for (int j = st + g.a; j < st + g.a + g.b; ++j) beta.w[j - 1] = j - g.a;
      // beta above is in "strand j goes to w(j)" form; one-line notation
      // lists w(1..m), which is exactly this array.
      core = multiply(multiply(symmetrizer(m, st, g.b), symmetrizer(m, st + g.b, g.a)),
                      SergeevElement::monomial(beta));
      break;
    }
    case Gen::WDot: {
      SergeevElement cs(m);
      for (int t = 0; t < g.a; ++t) {
        PBWMonomial c = PBWMonomial::one(m);
        c.c[st + t - 1] = 1;
        cs.add(c, Scalar(1));
      }
      core = multiply(symmetrizer(m, st, g.a), cs);
      break;
    }
    case Gen::BDot: {
      PBWMonomial x = PBWMonomial::one(m);
      for (int t = 0; t < g.a; ++t) x.x[st + t - 1] = 1;
      core = multiply(symmetrizer(m, st, g.a), SergeevElement::monomial(x));
      break;
    }
  }
  SergeevElement out = sym_of_parts(m, obj, s.pos, s.pos + g.in_arity(), core);
  std::lock_guard<std::mutex> lock(explode_mutex);
  cache.emplace(std::make_pair(obj, s), out);
  return out;
}

SergeevElement explode_term(const DiagramTerm& t) {
  static std::map<DiagramTerm, SergeevElement> cache;
  {
    std::lock_guard<std::mutex> lock(explode_mutex);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  Composition obj = t.source();
  int m = weight(obj);
  std::optional<SergeevElement> acc;
  for (const Slice& s : t.slices()) {
    SergeevElement x = explode_slice(obj, s);
    if (acc)
      acc = multiply(x, *acc) * inverse_factorials(obj);
    else
      acc = x;
    obj = apply_slice(obj, s);
  }
  if (!acc) acc = sym_of_parts(m, obj, 0, 0, SergeevElement::one(m));
  std::lock_guard<std::mutex> lock(explode_mutex);
  cache.emplace(t, *acc);
  return *acc;
}

SparseVec<PBWMonomial> to_vec(const SergeevElement& e) {
  return SparseVec<PBWMonomial>(e.terms().begin(), e.terms().end());
}

struct BasisSystem {
  std::vector<ElementaryCFD> basis;
  SparseEchelon<PBWMonomial> ech{true};
};

const BasisSystem& basis_system(const Composition& lambda, const Composition& mu, int maxdeg) {
  static std::mutex mu_;
  static std::map<std::tuple<Composition, Composition, int>, std::unique_ptr<BasisSystem>> cache;
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = cache[{lambda, mu, maxdeg}];
  if (!slot) {
    auto sys = std::make_unique<BasisSystem>();
    sys->basis = cfd_basis(lambda, mu, maxdeg);
    for (const auto& c : sys->basis)
      if (!sys->ech.insert(to_vec(thin_explode(embed(c)))))
        throw std::logic_error("basis dependence detected at " + c.str());
    slot = std::move(sys);
  }
  return *slot;
}

}  // namespace

SergeevElement thin_explode(const Morphism& f) {
  int m = weight(f.src());
  if (weight(f.tgt()) != m) throw std::invalid_argument("thin_explode: weight mismatch");
  SergeevElement out(m);
  for (const auto& [t, c] : f.terms()) out += explode_term(t) * c;
  return out;
}

NormalMorphism reduce(const Morphism& f) {
  NormalMorphism out(f.src(), f.tgt());
  if (f.is_zero()) return out;
  if (weight(f.src()) != weight(f.tgt())) throw std::logic_error("spanning violated");
  int deg = std::max(f.degree(), 0);
  const BasisSystem& sys = basis_system(f.tgt(), f.src(), deg);
  auto sol = sys.ech.solve(to_vec(thin_explode(f)));
  if (!sol) throw std::logic_error("spanning violated");
  for (const auto& [k, v] : *sol) out.add(sys.basis[k], v);
  return out;
}

// ---- Pushing dots -----------------------------------------------------------------------

Morphism push_dot_exact(PushSide side, int a, int b, int r, PushKind kind) {
  if (a < 1 || b < 1) throw std::invalid_argument("push_dot_exact: thicknesses must be >= 1");
  Composition two{a, b}, one{a + b};
  bool merge_side = side == PushSide::Merge;
  Morphism zero = merge_side ? Morphism(two, one) : Morphism(one, two);
  int hi = kind == PushKind::Omega ? a + b : a + b - 1;
  if (r < 0 || r > hi) return zero;
  if (kind == PushKind::OmegaCirc) {
    Morphism lhs = merge_side ? compose(omega_circ(a + b, r), merge(a, b))
                              : compose(split(a, b), omega_circ(a + b, r));
    return reduce(lhs).to_morphism();
  }
  Morphism out = zero;
  for (int c = 0; c <= std::min(r, a); ++c)
    for (int d = 0; c + d <= r && d <= b; ++d) {
      int t = r - c - d;
      mpz_class co = factorial(t) * binomial(a - c, t) * binomial(b - d, t);
      if (co != 0) {
        Morphism legs = tensor(omega(a, c), omega(b, d));
        out += (merge_side ? compose(merge(a, b), legs) : compose(legs, split(a, b))) *
               Scalar(mpq_class(co));
      }
      if (t >= 1 && c < a && d < b) {
        mpz_class cp = factorial(t - 1) * binomial(a - c - 1, t - 1) * binomial(b - d - 1, t - 1);
        if (cp != 0) {
          Morphism legs = tensor(omega_circ(a, c), omega_circ(b, d));
          Scalar s(mpq_class(merge_side ? -cp : cp));
          out += (merge_side ? compose(merge(a, b), legs) : compose(legs, split(a, b))) * s;
        }
      }
    }
  return out;
}

// ---- Leading terms ----------------------------------------------------------------------

namespace {

void require_single_strand(const Morphism& f) {
  if (f.src().size() != 1 || f.src() != f.tgt())
    throw std::invalid_argument("leading_class: expected an endomorphism of a single strand");
}

}  // namespace

LeadingClass leading_class(const Morphism& f, std::optional<int> degree) {
  require_single_strand(f);
  LeadingClass out;
  out.degree = degree.value_or(f.degree());
  out.top = reduce(f).degree_part(out.degree);
  out.in_D = out.in_E = out.in_Z = true;
  for (const auto& [c, v] : out.top.terms()) {
    LegDecor d = c.decor_at(0, 0);
    if (!d.nu.empty()) out.in_D = false;
    if (!d.nu.empty() && !(d.nu.size() == 2 && d.eta.empty())) out.in_Z = false;
  }
  out.in_E0 = out.in_D;
  return out;
}

bool leading_in_span(const Morphism& f, int d, const std::vector<ElementaryCFD>& extra) {
  std::set<ElementaryCFD> allowed(extra.begin(), extra.end());
  const NormalMorphism top = reduce(f).degree_part(d);
  for (const auto& [c, v] : top.terms()) {
    bool no_white = true;
    for (const auto& [ij, dec] : c.decor())
      if (!dec.nu.empty()) no_white = false;
    if (!no_white && !allowed.count(c)) return false;
  }
  return true;
}

}  // namespace qweb
