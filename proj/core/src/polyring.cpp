// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qweb/linalg.hpp"

namespace qweb {

bool GrLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(const Scalar& c, int nvars) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::var(int i, int nvars) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Scalar MultiPoly::coeff(const Exponents& e) const {
  Exponents k(e);
  k.resize(static_cast<std::size_t>(nvars_), 0);
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::widen(int n) {
  if (n <= nvars_) return;
  Terms t;
  for (auto& [e, c] : terms_) {
    Exponents k(e);
    k.resize(static_cast<std::size_t>(n), 0);
    t.emplace(std::move(k), c);
  }
  terms_ = std::move(t);
  nvars_ = n;
}

void MultiPoly::add_term(Exponents e, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) > nvars_) widen(static_cast<int>(e.size()));
  e.resize(static_cast<std::size_t>(nvars_), 0);
  auto [it, fresh] = terms_.try_emplace(std::move(e), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  widen(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  widen(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  int n = std::max(a.nvars_, b.nvars_);
  MultiPoly out(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly d = a - b;
  return d.is_zero();
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point.at(i);
    acc += t;
  }
  return acc;
}

std::vector<MultiPoly> MultiPoly::decompose_in(int i) const {
  std::vector<MultiPoly> out;
  const auto idx = static_cast<std::size_t>(i - 1);
  for (const auto& [e, c] : terms_) {
    int j = idx < e.size() ? e[idx] : 0;
    if (static_cast<int>(out.size()) <= j) out.resize(static_cast<std::size_t>(j + 1), MultiPoly(nvars_));
    Exponents k(e);
    if (idx < k.size()) k[idx] = 0;
    out[static_cast<std::size_t>(j)].add_term(k, c);
  }
  return out;
}

bool MultiPoly::divisible_by(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly r = *this;
  r.widen(d.nvars_);
  const auto& [de, dc] = *d.terms_.begin();
  // Only leading terms are cancelled; a non-divisible leading term means
  // the remainder is nonzero.
  while (!r.is_zero()) {
    const auto [re, rc] = *r.terms_.begin();
    Exponents q(re.size(), 0);
    for (std::size_t i = 0; i < re.size(); ++i) {
      int di = i < de.size() ? de[i] : 0;
      if (re[i] < di) return false;
      q[i] = re[i] - di;
    }
    MultiPoly mono(r.nvars_);
    mono.add_term(q, rc / dc);
    r -= mono * d;
  }
  return true;
}

std::string MultiPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string cs;
    bool neg = false;
    if (c.is_real()) {
      neg = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      if (a != 1 || is_const) cs = a.get_str();
    } else {
      cs = "(" + c.str() + ")";
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    os << cs;
    bool need_sep = !cs.empty();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_sep) os << "*";
      os << var << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

MultiPoly elem_sym_of(int r, const std::vector<MultiPoly>& xs, int nvars) {
  if (r < 0 || r > static_cast<int>(xs.size())) return MultiPoly(nvars);
  std::vector<MultiPoly> E(static_cast<std::size_t>(r + 1), MultiPoly(nvars));
  E[0] = MultiPoly::constant(Scalar(1), nvars);
  int seen = 0;
  for (const auto& x : xs) {
    ++seen;
    for (int j = std::min(r, seen); j >= 1; --j) E[static_cast<std::size_t>(j)] += E[static_cast<std::size_t>(j - 1)] * x;
  }
  return E[static_cast<std::size_t>(r)];
}

MultiPoly elem_sym(int r, const std::vector<int>& vars, int nvars) {
  std::vector<MultiPoly> xs;
  for (int v : vars) xs.push_back(MultiPoly::var(v, nvars));
  return elem_sym_of(r, xs, nvars);
}

MultiPoly elem_sym_mu(const std::vector<int>& mu, const std::vector<int>& vars, int nvars) {
  MultiPoly p = MultiPoly::constant(Scalar(1), nvars);
  for (int m : mu) {
    if (m < 0) return MultiPoly(nvars);
    if (m == 0) continue;
    p = p * elem_sym(m, vars, nvars);
    if (p.is_zero()) break;
  }
  return p;
}

MultiPoly vandermonde(const std::vector<int>& vars, int nvars) {
  MultiPoly p = MultiPoly::constant(Scalar(1), nvars);
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      p = p * (MultiPoly::var(vars[a], nvars) - MultiPoly::var(vars[b], nvars));
  return p;
}

std::vector<std::vector<MultiPoly>> esym_matrix_B(int s) {
  std::vector<std::vector<MultiPoly>> B(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) {
    std::vector<int> others;
    for (int t = 1; t <= s; ++t)
      if (t != i) others.push_back(t);
    for (int j = 1; j <= s; ++j) B[static_cast<std::size_t>(i - 1)].push_back(elem_sym(j - 1, others, s));
  }
  return B;
}

MultiPoly esym_minor(int i, int j, int s) {
  if (i < 1 || i > s || j < 1 || j > s) throw std::out_of_range("minor index out of range");
  std::vector<int> others;
  for (int t = 1; t <= s; ++t)
    if (t != i) others.push_back(t);
  MultiPoly p = vandermonde(others, s);
  for (int k = 0; k < s - j; ++k) p = p * MultiPoly::var(i, s);
  return p;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  int nv = 0;
  for (const auto& row : m)
    for (const auto& x : row) nv = std::max(nv, x.nvars());
  if (n == 0) return MultiPoly::constant(Scalar(1), nv);
  if (n == 1) return m[0][0];
  MultiPoly acc(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * determinant(sub);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

MultiPoly matrix_minor(const std::vector<std::vector<MultiPoly>>& m, int i, int j) {
  const int n = static_cast<int>(m.size());
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("minor index out of range");
  int nv = 0;
  for (const auto& row : m)
    for (const auto& x : row) nv = std::max(nv, x.nvars());
  std::vector<std::vector<MultiPoly>> sub;
  for (int r = 0; r < n; ++r) {
    if (r == i - 1) continue;
    std::vector<MultiPoly> row;
    for (int c = 0; c < n; ++c)
      if (c != j - 1) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    sub.push_back(std::move(row));
  }
  if (sub.empty()) return MultiPoly::constant(Scalar(1), nv);
  return determinant(sub);
}

namespace {

std::vector<int> range_vars(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

void check_spar(const Partition& lambda, int k, int a) {
  if (!is_strict_partition(lambda)) throw std::invalid_argument("lambda must be a strict partition");
  if (static_cast<int>(lambda.size()) != k) throw std::invalid_argument("lambda must have k parts");
  if (!lambda.empty() && lambda.front() > a) throw std::invalid_argument("parts of lambda exceed a");
}

}  // namespace

MultiPoly g_lambda(const Partition& lambda, int k, int a, GMethod method) {
  check_spar(lambda, k, a);
  if (k == 0) return MultiPoly::constant(Scalar(1), a);
  auto lb = bar_partition(lambda);  // lb[t-1] = bar lambda_t
  if (method == GMethod::Raising) {
    std::vector<int> base(lb);
    auto r = rho(k);
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i)] -= r[static_cast<std::size_t>(i)];
    MultiPoly acc(a);
    auto vars = range_vars(k + 1, a);
    for (const auto& R : raising_subsets(k)) acc += elem_sym_mu(apply_raising(R, base), vars, a);
    return acc;
  }
  // g_1 = e_{bar lambda_k}(y_2..y_a); then peel off y_{r+1}.
  MultiPoly g = elem_sym(lb[static_cast<std::size_t>(k - 1)], range_vars(2, a), a);
  for (int r = 1; r <= k - 1; ++r) {
    auto A = g.decompose_in(r + 1);
    MultiPoly next(a);
    auto vars = range_vars(r + 2, a);
    for (std::size_t j = 0; j < A.size(); ++j) {
      int deg = lb[static_cast<std::size_t>(k - r - 1)] + static_cast<int>(j) - r;
      if (A[j].is_zero()) continue;
      next += A[j] * elem_sym(deg, vars, a);
    }
    g = std::move(next);
  }
  return g;
}

MultiPoly packet_leading_poly(const Partition& lambda, const Partition& mu, int a, int k,
                              const std::vector<int>& parities) {
  if (k > a) throw std::invalid_argument("k exceeds a");
  Scalar pref(1);
  for (int t = 1; t <= k; ++t) {
    pref *= Scalar::i();
    int s = 0;
    for (int u = 1; u <= t; ++u) s += static_cast<std::size_t>(u - 1) < parities.size() ? parities[static_cast<std::size_t>(u - 1)] : 0;
    if (s & 1) pref = -pref;
  }
  MultiPoly p = vandermonde(range_vars(1, k), a) * g_lambda(lambda, k, a, GMethod::Raising) *
                elem_sym_mu(mu, range_vars(1, a), a);
  return p * pref;
}

int independence_rank(const std::vector<PairIndex>& pairs, int a, int k) {
  SparseEchelon<Exponents> ech;
  for (const auto& pr : pairs) {
    MultiPoly p = g_lambda(pr.lambda, k, a, GMethod::Raising) * elem_sym_mu(pr.mu, range_vars(1, a), a);
    SparseVec<Exponents> v(p.terms().begin(), p.terms().end());
    ech.insert(std::move(v));
  }
  return static_cast<int>(ech.rank());
}

// ---- LeadingState -----------------------------------------------------------

LeadingState LeadingState::basis(const Word& w, const MultiPoly& h) {
  int n = h.nvars();
  for (const auto& l : w) n = std::max(n, l.index);
  LeadingState s(n);
  s.add(w, h);
  return s;
}

void LeadingState::add(const Word& w, const MultiPoly& p) {
  if (p.is_zero()) return;
  for (const auto& l : w) nvars_ = std::max(nvars_, l.index);
  auto [it, fresh] = terms_.try_emplace(w, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly LeadingState::component(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MultiPoly(nvars_) : it->second;
}

int LeadingState::psi(const Word& i, const Word& j) {
  int n = 0;
  for (std::size_t s = 0; s < std::min(i.size(), j.size()); ++s)
    if (i[s].index == j[s].index && i[s].barred != j[s].barred) ++n;
  return n;
}

namespace {

MultiPoly letter_y(const Letter& l, int nvars) {
  MultiPoly y = MultiPoly::var(l.index, nvars);
  return l.barred ? -y : y;
}

LeadingState apply_omega(int a, const Partition& nu, const LeadingState& s) {
  LeadingState out(s.nvars());
  for (const auto& [w, p] : s.terms()) {
    if (static_cast<int>(w.size()) != a) throw std::invalid_argument("word length differs from thickness");
    std::vector<MultiPoly> ys;
    for (const auto& l : w) ys.push_back(letter_y(l, s.nvars()));
    MultiPoly e = MultiPoly::constant(Scalar(1), s.nvars());
    for (int part : nu) e = e * elem_sym_of(part, ys, s.nvars());
    out.add(w, e * p);
  }
  return out;
}

LeadingState apply_omega_circ(int a, int r, const LeadingState& s) {
  LeadingState out(s.nvars());
  if (r < 0 || r >= a) return out;
  for (const auto& [w, p] : s.terms()) {
    if (static_cast<int>(w.size()) != a) throw std::invalid_argument("word length differs from thickness");
    int par = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      par += w[t].current_parity();
      std::vector<MultiPoly> ys;
      for (std::size_t u = 0; u < w.size(); ++u)
        if (u != t) ys.push_back(letter_y(w[u], s.nvars()));
      Scalar c = (par & 1) ? -Scalar::i() : Scalar::i();
      Word nw = w;
      nw[t].barred = !nw[t].barred;
      out.add(nw, elem_sym_of(r, ys, s.nvars()) * p * c);
    }
  }
  return out;
}

}  // namespace

LeadingState leading_action(const LeadingSymbol& sym, const LeadingState& s) {
  return std::visit(
      [&](const auto& x) -> LeadingState {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OmegaSym>) {
          return apply_omega(x.a, x.nu, s);
        } else if constexpr (std::is_same_v<T, OmegaCircSym>) {
          return apply_omega_circ(x.a, x.r, s);
        } else {
          LeadingState cur = apply_omega(x.a, x.mu, s);
          auto lb = bar_partition(x.lambda);
          for (auto it = lb.rbegin(); it != lb.rend(); ++it) cur = apply_omega_circ(x.a, *it, cur);
          return cur;
        }
      },
      sym);
}

}  // namespace qweb
