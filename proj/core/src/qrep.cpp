// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/qrep.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "qweb/linalg.hpp"

namespace qweb {

// ---- Checked Gaussian integers ---------------------------------------------------

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussian int overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussian int overflow");
  return r;
}

}  // namespace

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  re = checked_add(re, o.re);
  im = checked_add(im, o.im);
  return *this;
}

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {checked_add(checked_mul(a.re, b.re), -checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

// ---- Symmetric powers -----------------------------------------------------------

namespace {

int letter_parity(int x, int n) { return x >= n ? 1 : 0; }

void even_multisets(int n, int size, int from, MonoWord& cur, std::vector<MonoWord>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < n; ++x) {
    cur.push_back(x);
    even_multisets(n, size - 1, x, cur, out);
    cur.pop_back();
  }
}

void odd_subsets(int n, int size, int from, MonoWord& cur, std::vector<MonoWord>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < n; ++x) {
    cur.push_back(n + x);
    odd_subsets(n, size - 1, x + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymPowerBasis::SymPowerBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("SymPowerBasis: need n >= 1, degree >= 0");
  for (int k = 0; k <= std::min(n, degree); ++k) {
    std::vector<MonoWord> evens, odds;
    MonoWord cur;
    even_multisets(n, degree - k, 0, cur, evens);
    odd_subsets(n, k, 0, cur, odds);
    std::vector<MonoWord> block;
    for (const auto& e : evens)
      for (const auto& o : odds) {
        MonoWord w = e;
        w.insert(w.end(), o.begin(), o.end());
        block.push_back(std::move(w));
      }
    std::sort(block.begin(), block.end());
    for (auto& w : block) {
      index_.emplace(w, static_cast<int>(words_.size()));
      parity_.push_back(k % 2);
      words_.push_back(std::move(w));
    }
  }
}

int SymPowerBasis::index_of(const MonoWord& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::string SymPowerBasis::str(int id) const {
  const MonoWord& w = monomial(id);
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += ' ';
    int x = w[t];
    s += "v" + std::to_string((x % n_) + 1);
    if (x >= n_) s += 'b';
  }
  return s;
}

const SymPowerBasis& sym_basis(int n, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SymPowerBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, degree}];
  if (!slot) slot = std::make_unique<SymPowerBasis>(n, degree);
  return *slot;
}

std::optional<std::pair<int, MonoWord>> normal_order(MonoWord w, int n) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!letter_parity(w[i], n)) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!letter_parity(w[j], n)) continue;
      if (w[i] == w[j]) return std::nullopt;
      if (w[i] > w[j]) ++inversions;
    }
  }
  std::sort(w.begin(), w.end());
  return std::make_pair(inversions % 2 ? -1 : 1, std::move(w));
}

// ---- q_n ----------------------------------------------------------------------

std::string QnElement::str() const {
  return std::string(companion ? "f" : "e") + "^" + std::to_string(eps) + "_{" +
         std::to_string(i) + "," + std::to_string(j) + "}";
}

GlElement gl_element(const QnElement& x, int n) {
  if (x.i < 1 || x.i > n || x.j < 1 || x.j > n || (x.eps != 0 && x.eps != 1))
    throw std::out_of_range("q_n element index out of range: " + x.str());
  int i = x.i - 1, j = x.j - 1, s = x.companion ? -1 : 1;
  if (x.eps == 0) return {{i, j, 1}, {n + i, n + j, s}};
  return {{n + i, j, 1}, {i, n + j, s}};
}

std::map<MonoWord, Scalar> act_on_sympower(const GlElement& x, const MonoWord& m, int n) {
  std::map<MonoWord, Scalar> out;
  for (int v : m)
    if (v < 0 || v >= 2 * n) throw std::out_of_range("monomial letter out of range");
  for (const GlTerm& e : x) {
    if (e.p < 0 || e.p >= 2 * n || e.q < 0 || e.q >= 2 * n)
      throw std::out_of_range("gl index out of range");
    int pe = letter_parity(e.p, n) ^ letter_parity(e.q, n);
    int prefix = 0;
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m[t] == e.q) {
        MonoWord w = m;
        w[t] = e.p;
        if (auto no = normal_order(std::move(w), n)) {
          int sign = no->first * ((pe && prefix) ? -1 : 1) * e.coeff;
          auto [it, fresh] = out.try_emplace(no->second, Scalar(sign));
          if (!fresh) {
            it->second += Scalar(sign);
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
      prefix ^= letter_parity(m[t], n);
    }
  }
  return out;
}

std::map<MonoWord, Scalar> act_on_sympower(const QnElement& x, const MonoWord& m, int n) {
  return act_on_sympower(gl_element(x, n), m, n);
}

// ---- Tensor products ------------------------------------------------------------

std::int64_t tensor_dim(const std::vector<int>& factors, int n) {
  std::int64_t d = 1;
  for (int f : factors)
    if (__builtin_mul_overflow(d, static_cast<std::int64_t>(sym_basis(n, f).size()), &d))
      throw OracleTooLarge("oracle too large");
  return d;
}

namespace {

std::vector<int> digits_of(const std::vector<int>& factors, int n, std::int64_t index) {
  std::vector<int> d(factors.size());
  for (std::size_t f = factors.size(); f-- > 0;) {
    std::int64_t dim = sym_basis(n, factors[f]).size();
    d[f] = static_cast<int>(index % dim);
    index /= dim;
  }
  return d;
}

std::int64_t index_of_digits(const std::vector<int>& factors, int n, const std::vector<int>& d) {
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * sym_basis(n, factors[f]).size() + d[f];
  return idx;
}

}  // namespace

int basis_parity(const std::vector<int>& factors, int n, std::int64_t index) {
  auto d = digits_of(factors, n, index);
  int p = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) p ^= sym_basis(n, factors[f]).parity(d[f]);
  return p;
}

std::string basis_str(const std::vector<int>& factors, int n, std::int64_t index) {
  auto d = digits_of(factors, n, index);
  std::string s;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f) s += " (x) ";
    s += sym_basis(n, factors[f]).str(d[f]);
  }
  return s.empty() ? "1" : s;
}

// ---- SuperLinearMap -------------------------------------------------------------

SuperLinearMap::SuperLinearMap(std::vector<int> source_factors, std::vector<int> target_factors,
                               int n)
    : n_(n), src_(std::move(source_factors)), tgt_(std::move(target_factors)) {
  rows_ = tensor_dim(tgt_, n_);
  cols_ = tensor_dim(src_, n_);
  columns_.resize(static_cast<std::size_t>(cols_));
}

SuperLinearMap SuperLinearMap::identity(const std::vector<int>& factors, int n) {
  SuperLinearMap m(factors, factors, n);
  for (std::int64_t j = 0; j < m.cols_; ++j) m.columns_[j].push_back({j, Scalar(1)});
  return m;
}

Scalar SuperLinearMap::entry(std::int64_t row, std::int64_t col) const {
  const Column& c = columns_.at(static_cast<std::size_t>(col));
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::int64_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : Scalar(0);
}

bool SuperLinearMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::optional<int> SuperLinearMap::parity() const {
  std::optional<int> p;
  for (std::int64_t j = 0; j < cols_; ++j) {
    if (columns_[j].empty()) continue;
    int pj = basis_parity(src_, n_, j);
    for (const auto& [r, v] : columns_[j]) {
      int q = pj ^ basis_parity(tgt_, n_, r);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  }
  return p.value_or(0);
}

std::vector<std::vector<Scalar>> SuperLinearMap::dense() const {
  if (rows_ * cols_ > 1000000) throw OracleTooLarge("dense matrix too large");
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (std::int64_t j = 0; j < cols_; ++j)
    for (const auto& [r, v] : columns_[j]) d[r][j] = v;
  return d;
}

void SuperLinearMap::check_same_shape(const SuperLinearMap& o) const {
  if (n_ != o.n_ || src_ != o.src_ || tgt_ != o.tgt_)
    throw std::invalid_argument("SuperLinearMap: shape mismatch");
}

namespace {

using Acc = std::map<std::int64_t, Scalar>;

void acc_add(Acc& acc, std::int64_t k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = acc.try_emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SuperLinearMap::Column to_column(const Acc& acc) { return {acc.begin(), acc.end()}; }

}  // namespace

SuperLinearMap& SuperLinearMap::operator+=(const SuperLinearMap& o) {
  check_same_shape(o);
  for (std::int64_t j = 0; j < cols_; ++j) {
    Acc acc(columns_[j].begin(), columns_[j].end());
    for (const auto& [r, v] : o.columns_[j]) acc_add(acc, r, v);
    columns_[j] = to_column(acc);
  }
  return *this;
}

SuperLinearMap& SuperLinearMap::operator-=(const SuperLinearMap& o) {
  return *this += o * Scalar(-1);
}

SuperLinearMap& SuperLinearMap::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    for (auto& col : columns_) col.clear();
    return *this;
  }
  for (auto& col : columns_)
    for (auto& e : col) e.second *= c;
  return *this;
}

SuperLinearMap operator*(const SuperLinearMap& a, const SuperLinearMap& b) {
  if (a.n_ != b.n_ || a.src_ != b.tgt_)
    throw std::invalid_argument("SuperLinearMap: composition boundary mismatch");
  SuperLinearMap out(b.src_, a.tgt_, a.n_);
  for (std::int64_t j = 0; j < b.cols_; ++j) {
    Acc acc;
    for (const auto& [k, bv] : b.columns_[j])
      for (const auto& [r, av] : a.columns_[k]) acc_add(acc, r, av * bv);
    out.columns_[j] = to_column(acc);
  }
  return out;
}

bool operator==(const SuperLinearMap& a, const SuperLinearMap& b) {
  return a.n_ == b.n_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.columns_ == b.columns_;
}

// ---- The evaluator --------------------------------------------------------------

namespace {

using Local = std::vector<std::pair<std::int64_t, GaussInt>>;

Local to_local(const std::map<std::int64_t, GaussInt>& m) {
  Local out;
  for (const auto& [k, v] : m)
    if (!v.is_zero()) out.emplace_back(k, v);
  return out;
}

void local_add(std::map<std::int64_t, GaussInt>& m, std::int64_t k, GaussInt v) { m[k] += v; }

// Caches of local generator actions for a fixed n.
class Oracle {
 public:
  explicit Oracle(int n) : n_(n) {}

  int n() const { return n_; }

  const Local& generator(const Generator& g, std::int64_t in) {
    auto& table = gen_[g];
    if (table.empty()) table.resize(static_cast<std::size_t>(tensor_dim(g.inputs(), n_)));
    auto& slot = table[static_cast<std::size_t>(in)];
    if (!slot) slot = compute_generator(g, in);
    return *slot;
  }

  // Omega's two pieces on S^d (x) S^a at local index u * dim_a + v.
  const std::pair<Local, Local>& omega_pair(int d, int a, std::int64_t in) {
    auto& table = omega_[{d, a}];
    if (table.empty()) table.resize(static_cast<std::size_t>(tensor_dim({d, a}, n_)));
    auto& slot = table[static_cast<std::size_t>(in)];
    if (!slot) slot = compute_omega(d, a, in);
    return *slot;
  }

 private:
  int id_of(int degree, const MonoWord& w) const { return sym_basis(n_, degree).index_of(w); }

  Local compute_generator(const Generator& g, std::int64_t in) const {
    std::map<std::int64_t, GaussInt> out;
    switch (g.kind) {
      case Gen::Merge: {
        const auto& A = sym_basis(n_, g.a);
        const auto& B = sym_basis(n_, g.b);
        MonoWord w = A.monomial(static_cast<int>(in / B.size()));
        const MonoWord& v = B.monomial(static_cast<int>(in % B.size()));
        w.insert(w.end(), v.begin(), v.end());
        if (auto no = normal_order(std::move(w), n_))
          local_add(out, id_of(g.a + g.b, no->second), {no->first, 0});
        break;
      }
      case Gen::Split: {
        const MonoWord& w = sym_basis(n_, g.a + g.b).monomial(static_cast<int>(in));
        int len = static_cast<int>(w.size());
        std::int64_t dimb = sym_basis(n_, g.b).size();
        // Every choice of a positions for the left factor; the sign reorders
        // w into (chosen)(rest).
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
          if (__builtin_popcount(mask) != g.a) continue;
          MonoWord left, right;
          int crossings = 0, odd_right_so_far = 0;
          for (int t = 0; t < len; ++t) {
            int p = letter_parity(w[t], n_);
            if (mask >> t & 1) {
              left.push_back(w[t]);
              if (p) crossings += odd_right_so_far;
            } else {
              right.push_back(w[t]);
              odd_right_so_far += p;
            }
          }
          local_add(out, id_of(g.a, left) * dimb + id_of(g.b, right), {crossings % 2 ? -1 : 1, 0});
        }
        break;
      }
      case Gen::Cross: {
        const auto& A = sym_basis(n_, g.a);
        const auto& B = sym_basis(n_, g.b);
        int u = static_cast<int>(in / B.size()), v = static_cast<int>(in % B.size());
        int sign = (A.parity(u) && B.parity(v)) ? -1 : 1;
        local_add(out, static_cast<std::int64_t>(v) * A.size() + u, {sign, 0});
        break;
      }
      case Gen::WDot: {
        const MonoWord& w = sym_basis(n_, g.a).monomial(static_cast<int>(in));
        int prefix = 0;
        for (std::size_t t = 0; t < w.size(); ++t) {
          int x = w[t];
          bool odd = letter_parity(x, n_);
          MonoWord m = w;
          m[t] = odd ? x - n_ : x + n_;
          // c(v_i) = i v_ib, c(v_ib) = -i v_i, and c passes the prefix.
          GaussInt c{0, odd ? -1 : 1};
          if (prefix) c = c * GaussInt{-1, 0};
          if (auto no = normal_order(std::move(m), n_))
            local_add(out, id_of(g.a, no->second), c * GaussInt{no->first, 0});
          prefix ^= odd;
        }
        break;
      }
      case Gen::BDot:
        throw std::logic_error("black dots are evaluated through omega_pair");
    }
    return to_local(out);
  }

  // P0(u (x) v) = -sum e0_ij u (x) f0_ji v;  P1 = (-1)^{|u|} sum e1_ij u (x) f1_ji v.
  std::pair<Local, Local> compute_omega(int d, int a, std::int64_t in) const {
    const auto& D = sym_basis(n_, d);
    const auto& A = sym_basis(n_, a);
    int u = static_cast<int>(in / A.size()), v = static_cast<int>(in % A.size());
    std::map<std::int64_t, GaussInt> p0, p1;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        for (int eps = 0; eps <= 1; ++eps) {
          auto xu = act_on_sympower(QnElement{eps, i, j, false}, D.monomial(u), n_);
          if (xu.empty()) continue;
          auto yv = act_on_sympower(QnElement{eps, j, i, true}, A.monomial(v), n_);
          int sign = eps == 0 ? -1 : (D.parity(u) ? -1 : 1);
          for (const auto& [mu, cu] : xu)
            for (const auto& [mv, cv] : yv) {
              std::int64_t k = static_cast<std::int64_t>(D.index_of(mu)) * A.size() + A.index_of(mv);
              GaussInt c{sign * mpz_class(cu.re()).get_si() * mpz_class(cv.re()).get_si(), 0};
              local_add(eps == 0 ? p0 : p1, k, c);
            }
        }
    return {to_local(p0), to_local(p1)};
  }

  int n_;
  std::map<Generator, std::vector<std::optional<Local>>> gen_;
  std::map<std::pair<int, int>, std::vector<std::optional<std::pair<Local, Local>>>> omega_;
};

std::mutex oracle_mutex;

Oracle& oracle_for(int n) {
  static std::map<int, std::unique_ptr<Oracle>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Oracle>(n);
  return *slot;
}

template <class T>
T times(const T& x, const GaussInt& g);
template <>
GaussInt times(const GaussInt& x, const GaussInt& g) {
  return x * g;
}
template <>
Scalar times(const Scalar& x, const GaussInt& g) {
  return x * g.to_scalar();
}

template <class T>
bool is_zero_value(const T& x) {
  return x.is_zero();
}

template <class T>
using Vec = std::vector<std::pair<std::int64_t, T>>;

template <class T>
void combine(Vec<T>& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::int64_t k = v[r].first;
    T acc = v[r].second;
    for (++r; r < v.size() && v[r].first == k; ++r) acc += v[r].second;
    if (!is_zero_value(acc)) v[w++] = {k, acc};
  }
  v.resize(w);
}

// An object of the evaluation: factor degrees, their dimensions and parities.
struct Frame {
  std::vector<int> degs;
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> strides;  // stride of each factor in the flat index
  std::int64_t total = 1;

  Frame(std::vector<int> d, int n) : degs(std::move(d)) {
    dims.resize(degs.size());
    strides.resize(degs.size());
    for (std::size_t f = 0; f < degs.size(); ++f) dims[f] = sym_basis(n, degs[f]).size();
    total = 1;
    for (std::size_t f = degs.size(); f-- > 0;) {
      strides[f] = total;
      if (__builtin_mul_overflow(total, dims[f], &total)) throw OracleTooLarge("oracle too large");
    }
  }
};

struct TrieNode {
  std::map<Slice, int> child;
  std::optional<Scalar> coeff;
  int frame = 0;  // index into the frame list
};

class Evaluator {
 public:
  Evaluator(const Morphism& f, int n, const ModuleSpec& m)
      : n_(n), shift_(static_cast<int>(m.size())), oracle_(oracle_for(n)) {
    auto frame_of = [&](const Composition& obj) {
      std::vector<int> degs = m;
      degs.insert(degs.end(), obj.begin(), obj.end());
      frames_.emplace_back(std::move(degs), n);
      return static_cast<int>(frames_.size()) - 1;
    };
    nodes_.push_back({});
    nodes_[0].frame = frame_of(f.src());
    for (const auto& [term, c] : f.terms()) {
      int at = 0;
      Composition obj = term.source();
      for (const Slice& s : term.slices()) {
        obj = apply_slice(obj, s);
        auto it = nodes_[at].child.find(s);
        if (it == nodes_[at].child.end()) {
          int fr = frame_of(obj);
          nodes_.push_back({});
          nodes_.back().frame = fr;
          it = nodes_[at].child.emplace(s, static_cast<int>(nodes_.size()) - 1).first;
        }
        at = it->second;
      }
      nodes_[at].coeff = c;
    }
  }

  template <class T>
  SuperLinearMap::Column column(std::int64_t col) {
    Acc acc;
    Vec<T> start{{col, T{1}}};
    dfs<T>(0, start, acc);
    return to_column(acc);
  }

  SuperLinearMap::Column column_any(std::int64_t col) {
    try {
      return column<GaussInt>(col);
    } catch (const std::overflow_error&) {
      return column<Scalar>(col);
    }
  }

 private:
  template <class T>
  void dfs(int node, const Vec<T>& v, Acc& acc) {
    const TrieNode& nd = nodes_[node];
    if (nd.coeff)
      for (const auto& [k, x] : v) acc_add(acc, k, *nd.coeff * to_scalar(x));
    for (const auto& [slice, next] : nd.child) {
      Vec<T> w = apply<T>(frames_[nd.frame], frames_[nodes_[next].frame], slice, v);
      if (!w.empty()) dfs<T>(next, w, acc);
    }
  }

  static Scalar to_scalar(const GaussInt& g) { return g.to_scalar(); }
  static Scalar to_scalar(const Scalar& s) { return s; }

  template <class T>
  Vec<T> apply(const Frame& in, const Frame& out, const Slice& s, const Vec<T>& v) {
    int q = shift_ + s.pos;
    Vec<T> res;
    if (s.gen.kind == Gen::BDot) {
      std::int64_t dimq = in.dims[q];
      for (const auto& [idx, x] : v) {
        std::vector<int> dig(q + 1);
        for (int f = 0; f <= q; ++f) dig[f] = static_cast<int>((idx / in.strides[f]) % in.dims[f]);
        // Parity of the factors strictly between k and the dotted strand.
        int between = 0;
        for (int k = q - 1; k >= 0; --k) {
          const auto& [p0, p1] = oracle_.omega_pair(in.degs[k], in.degs[q], dig[k] * dimq + dig[q]);
          std::int64_t base = idx - dig[k] * in.strides[k] - dig[q] * in.strides[q];
          for (const auto& [loc, c] : p0)
            res.emplace_back(base + (loc / dimq) * in.strides[k] + (loc % dimq) * in.strides[q],
                             times(x, c));
          GaussInt sgn{between ? -1 : 1, 0};
          for (const auto& [loc, c] : p1)
            res.emplace_back(base + (loc / dimq) * in.strides[k] + (loc % dimq) * in.strides[q],
                             times(x, c * sgn));
          between ^= sym_basis(n_, in.degs[k]).parity(dig[k]);
        }
      }
      combine(res);
      return res;
    }
    int k_in = s.gen.in_arity(), k_out = s.gen.out_arity();
    // Product of the dimensions to the right of the consumed block.
    std::int64_t right = in.strides[q + k_in - 1];
    std::int64_t mid_in = in.strides[q] * in.dims[q] / right;
    std::int64_t mid_out = 1;
    for (int t = 0; t < k_out; ++t) mid_out *= out.dims[q + t];
    bool odd = s.gen.parity() == 1;
    for (const auto& [idx, x] : v) {
      std::int64_t r = idx % right;
      std::int64_t rest = idx / right;
      std::int64_t mid = rest % mid_in;
      std::int64_t left = rest / mid_in;
      T xs = x;
      if (odd) {
        int p = 0;
        for (int f = 0; f < q; ++f)
          p ^= sym_basis(n_, in.degs[f]).parity(static_cast<int>((idx / in.strides[f]) % in.dims[f]));
        if (p) xs = times(xs, GaussInt{-1, 0});
      }
      for (const auto& [loc, c] : oracle_.generator(s.gen, mid))
        res.emplace_back((left * mid_out + loc) * right + r, times(xs, c));
    }
    combine(res);
    return res;
  }

  int n_;
  int shift_;
  Oracle& oracle_;
  std::vector<Frame> frames_;
  std::vector<TrieNode> nodes_;
};

std::vector<int> with_module(const ModuleSpec& m, const Composition& c) {
  std::vector<int> v = m;
  v.insert(v.end(), c.begin(), c.end());
  return v;
}

}  // namespace

std::vector<SuperLinearMap::Column> eval_columns(const Morphism& f, int n, const ModuleSpec& m,
                                                 const std::vector<std::int64_t>& cols) {
  Morphism thin = thin_black_dots(f);
  std::lock_guard<std::mutex> lock(oracle_mutex);
  Evaluator ev(thin, n, m);
  std::vector<SuperLinearMap::Column> out;
  out.reserve(cols.size());
  for (std::int64_t c : cols) out.push_back(ev.column_any(c));
  return out;
}

namespace {

// Evaluates with every black dot acting as Omega on its left context, which
// is the correct value only for thin dots.
SuperLinearMap eval_raw(const Morphism& f, int n, const ModuleSpec& m, const OracleOptions& opts) {
  auto src = with_module(m, f.src()), tgt = with_module(m, f.tgt());
  if (tensor_dim(src, n) > opts.dim_cap || tensor_dim(tgt, n) > opts.dim_cap)
    throw OracleTooLarge("oracle too large");
  SuperLinearMap out(src, tgt, n);
  std::lock_guard<std::mutex> lock(oracle_mutex);
  Evaluator ev(f, n, m);
  for (std::int64_t j = 0; j < out.cols(); ++j) out.columns()[j] = ev.column_any(j);
  return out;
}

}  // namespace

// A thick black dot is the normalised balloon of thin ones; Omega on
// M (x) S^a(V) is the single thin dot on a thin leg, omega_{a,1}.
SuperLinearMap eval_morphism(const Morphism& f, int n, const ModuleSpec& m,
                             const OracleOptions& opts) {
  return eval_raw(thin_black_dots(f), n, m, opts);
}

SuperLinearMap psi_generator(const Generator& g, int n) { return eval_morphism(make(g), n, {}); }

SuperLinearMap omega_op(const ModuleSpec& m, int a, int n) {
  return eval_raw(make({Gen::BDot, a, 0}), n, m, {});
}

SuperLinearMap qn_action(const QnElement& x, const std::vector<int>& factors, int n) {
  GlElement g = gl_element(x, n);
  SuperLinearMap out(factors, factors, n);
  for (std::int64_t j = 0; j < out.cols(); ++j) {
    auto dig = digits_of(factors, n, j);
    Acc acc;
    int prefix = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& B = sym_basis(n, factors[f]);
      Scalar sign = (x.parity() && prefix) ? Scalar(-1) : Scalar(1);
      for (const auto& [w, c] : act_on_sympower(g, B.monomial(dig[f]), n)) {
        auto d2 = dig;
        d2[f] = B.index_of(w);
        acc_add(acc, index_of_digits(factors, n, d2), sign * c);
      }
      prefix ^= B.parity(dig[f]);
    }
    out.columns()[j] = to_column(acc);
  }
  return out;
}

int rank_of(const std::vector<Morphism>& fs, int n, const ModuleSpec& m,
            const OracleOptions& opts) {
  if (fs.empty()) return 0;
  for (const auto& f : fs)
    if (f.src() != fs[0].src() || f.tgt() != fs[0].tgt())
      throw std::invalid_argument("rank_of: morphisms must share boundaries");
  auto src = with_module(m, fs[0].src()), tgt = with_module(m, fs[0].tgt());
  std::int64_t cols = tensor_dim(src, n), rows = tensor_dim(tgt, n);
  if (cols > opts.dim_cap || rows > opts.dim_cap) throw OracleTooLarge("oracle too large");

  std::vector<std::int64_t> order(static_cast<std::size_t>(cols));
  for (std::int64_t j = 0; j < cols; ++j) order[j] = j;
  std::mt19937_64 rng(0x5eed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<SparseVec<std::int64_t>> vecs(fs.size());
  std::size_t done = 0, batch = 32;
  int rank = 0;
  while (done < order.size()) {
    std::size_t hi = std::min(order.size(), done + batch);
    std::vector<std::int64_t> sample(order.begin() + done, order.begin() + hi);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto colsv = eval_columns(fs[i], n, m, sample);
      for (std::size_t s = 0; s < sample.size(); ++s)
        for (const auto& [r, v] : colsv[s])
          vecs[i].emplace(static_cast<std::int64_t>(done + s) * rows + r, v);
    }
    done = hi;
    batch *= 2;
    SparseEchelon<std::int64_t> ech;
    for (const auto& v : vecs) ech.insert(v);
    rank = static_cast<int>(ech.rank());
    if (rank == static_cast<int>(fs.size())) break;
  }
  return rank;
}

}  // namespace qweb
