// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/sergeev.hpp"

#include "qweb/normalform.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qweb {

// ---- Monomials ------------------------------------------------------------------

PBWMonomial PBWMonomial::one(int n) {
  PBWMonomial m;
  m.w.resize(n);
  std::iota(m.w.begin(), m.w.end(), 1);
  m.c.assign(n, 0);
  m.x.assign(n, 0);
  return m;
}

int PBWMonomial::parity() const { return std::accumulate(c.begin(), c.end(), 0) % 2; }

int PBWMonomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }

std::vector<int> PBWMonomial::reduced_word() const {
  std::vector<int> perm = w, word;
  // Peel descents off the right: w = (w s_i) s_i whenever w(i) > w(i+1).
  for (;;) {
    int i = 0;
    while (i + 1 < static_cast<int>(perm.size()) && perm[i] < perm[i + 1]) ++i;
    if (i + 1 >= static_cast<int>(perm.size())) break;
    std::swap(perm[i], perm[i + 1]);
    word.push_back(i + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string PBWMonomial::str() const {
  std::string s;
  auto put = [&](const std::string& t) {
    if (!s.empty()) s += ' ';
    s += t;
  };
  for (int i : reduced_word()) put("s" + std::to_string(i));
  for (int j = 0; j < n(); ++j)
    if (c[j]) put("c" + std::to_string(j + 1));
  for (int j = 0; j < n(); ++j)
    if (x[j]) put("x" + std::to_string(j + 1) + (x[j] > 1 ? "^" + std::to_string(x[j]) : ""));
  return s.empty() ? "1" : s;
}

std::string PBWMonomial::pbw_str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "w=[" + join(w) + "] c=(" + join(c) + ") x=(" + join(x) + ")";
}

// ---- Words -------------------------------------------------------------------------

std::string SergeevLetter::str() const { return std::string(1, static_cast<char>(kind)) + std::to_string(index); }

SergeevWord parse_sergeev_word(std::string_view text, int n) {
  SergeevWord out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("sergeev word, column " + std::to_string(i + 1) + ": " + why);
  };
  auto number = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected index");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
    return v;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    if (ch != 's' && ch != 'x' && ch != 'c') fail(std::string("unexpected '") + ch + "'");
    ++i;
    int idx = number();
    int reps = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      reps = number();
    }
    int limit = ch == 's' ? n - 1 : n;
    if (idx < 1 || idx > limit) fail("index " + std::to_string(idx) + " out of range for n=" + std::to_string(n));
    for (int r = 0; r < reps; ++r) out.push_back({static_cast<SergeevLetter::Kind>(ch), idx});
  }
  return out;
}

std::string word_str(const SergeevWord& w) {
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : " ") + l.str();
  return s.empty() ? "1" : s;
}

// ---- Elements ----------------------------------------------------------------------

SergeevElement SergeevElement::one(int n) { return monomial(PBWMonomial::one(n)); }

SergeevElement SergeevElement::monomial(const PBWMonomial& m, const Scalar& c) {
  SergeevElement e(m.n());
  e.add(m, c);
  return e;
}

Scalar SergeevElement::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SergeevElement::add(const PBWMonomial& m, const Scalar& c) {
  if (m.n() != n_) throw std::invalid_argument("SergeevElement: rank mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SergeevElement::check_n(const SergeevElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SergeevElement: rank mismatch");
}

SergeevElement& SergeevElement::operator+=(const SergeevElement& o) {
  check_n(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SergeevElement& SergeevElement::operator-=(const SergeevElement& o) {
  check_n(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SergeevElement& SergeevElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

int inversions(const std::vector<int>& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) k += w[i] > w[j];
  return k;
}

bool display_before(const PBWMonomial& a, const PBWMonomial& b) {
  int la = inversions(a.w), lb = inversions(b.w);
  if (la != lb) return la > lb;
  if (a.w != b.w) return a.w < b.w;
  if (a.x_degree() != b.x_degree()) return a.x_degree() > b.x_degree();
  if (a.x != b.x) return a.x > b.x;
  int ca = std::accumulate(a.c.begin(), a.c.end(), 0), cb = std::accumulate(b.c.begin(), b.c.end(), 0);
  if (ca != cb) return ca < cb;
  return a.c > b.c;
}

std::string coeff_prefix(const Scalar& c, bool first, bool unit_monomial) {
  std::string s;
  Scalar mag = c;
  bool negative = c.is_real() && c.re() < 0;
  if (negative) mag = -c;
  if (first)
    s = negative ? "-" : "";
  else
    s = negative ? " - " : " + ";
  std::string body;
  if (mag.is_real()) {
    body = mag.str();
    if (mag.is_one() && !unit_monomial) body.clear();
  } else {
    body = "(" + mag.str() + ")";
  }
  if (!body.empty() && !unit_monomial) body += ' ';
  return s + body;
}

}  // namespace

std::string SergeevElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return display_before(a->first, b->first); });
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    bool unit = t->first == PBWMonomial::one(n_);
    s += coeff_prefix(t->second, first, unit);
    if (!unit) s += t->first.str();
    first = false;
  }
  return s;
}

// ---- Multiplication ------------------------------------------------------------------

namespace {

std::mutex cache_mutex;

SergeevElement times_x(const SergeevElement& u, int j) {
  SergeevElement out(u.n());
  for (const auto& [mono, c] : u.terms()) {
    PBWMonomial m = mono;
    ++m.x[j - 1];
    out.add(m, c);
  }
  return out;
}

// (w c^a x^b) c_j = (-1)^{b_j} (-1)^{#{k > j : a_k = 1}} w c^{a + e_j} x^b.
SergeevElement times_c(const SergeevElement& u, int j) {
  SergeevElement out(u.n());
  for (const auto& [mono, c] : u.terms()) {
    PBWMonomial m = mono;
    int sign = m.x[j - 1];
    for (int k = j; k < m.n(); ++k) sign += m.c[k];
    m.c[j - 1] ^= 1;
    out.add(m, sign % 2 ? -c : c);
  }
  return out;
}

SergeevElement monomial_times_s(const PBWMonomial& m, int i);

SergeevElement times_s(const SergeevElement& u, int i) {
  SergeevElement out(u.n());
  for (const auto& [m, c] : u.terms()) out += monomial_times_s(m, i) * c;
  return out;
}

SergeevElement monomial_times_s(const PBWMonomial& m, int i) {
  static std::map<std::pair<PBWMonomial, int>, SergeevElement> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({m, i});
    if (it != cache.end()) return it->second;
  }
  SergeevElement out(m.n());
  int k = m.n();
  while (k > 0 && m.x[k - 1] == 0) --k;
  if (k == 0) {
    // w c^a s_i = w s_i c^{s_i(a)}; reordering costs a sign when both c_i
    // and c_{i+1} are present.
    PBWMonomial r = m;
    std::swap(r.w[i - 1], r.w[i]);
    std::swap(r.c[i - 1], r.c[i]);
    out.add(r, (m.c[i - 1] && m.c[i]) ? Scalar(-1) : Scalar(1));
  } else {
    PBWMonomial rest = m;
    --rest.x[k - 1];
    SergeevElement base = SergeevElement::monomial(rest);
    SergeevElement moved = monomial_times_s(rest, i);
    if (k == i) {
      // x_i s_i = s_i x_{i+1} + 1 - c_i c_{i+1}
      out = times_x(moved, i + 1) + base - times_c(times_c(base, i), i + 1);
    } else if (k == i + 1) {
      // x_{i+1} s_i = s_i x_i - 1 - c_i c_{i+1}
      out = times_x(moved, i) - base - times_c(times_c(base, i), i + 1);
    } else {
      out = times_x(moved, k);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(m, i), out);
  return out;
}

SergeevElement monomial_product(const PBWMonomial& a, const PBWMonomial& b) {
  static std::map<std::pair<PBWMonomial, PBWMonomial>, SergeevElement> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
  }
  SergeevElement u = SergeevElement::monomial(a);
  for (int i : b.reduced_word()) u = times_s(u, i);
  for (int j = 1; j <= b.n(); ++j)
    if (b.c[j - 1]) u = times_c(u, j);
  for (int j = 1; j <= b.n(); ++j)
    for (int e = 0; e < b.x[j - 1]; ++e) u = times_x(u, j);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(a, b), u);
  return u;
}

}  // namespace

SergeevElement times_letter(const SergeevElement& u, const SergeevLetter& l) {
  int limit = l.kind == SergeevLetter::S ? u.n() - 1 : u.n();
  if (l.index < 1 || l.index > limit) throw std::invalid_argument("letter index out of range: " + l.str());
  switch (l.kind) {
    case SergeevLetter::S:
      return times_s(u, l.index);
    case SergeevLetter::C:
      return times_c(u, l.index);
    case SergeevLetter::X:
      return times_x(u, l.index);
  }
  throw std::logic_error("unreachable");
}

SergeevElement multiply(const SergeevElement& u, const SergeevElement& v) {
  if (u.n() != v.n()) throw std::invalid_argument("multiply: rank mismatch");
  SergeevElement out(u.n());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out += monomial_product(a, b) * (ca * cb);
  return out;
}

SergeevElement straighten(const SergeevWord& w, int n) {
  SergeevElement u = SergeevElement::one(n);
  for (const auto& l : w) u = times_letter(u, l);
  return u;
}

SergeevElement symmetrizer(int n, int first, int k) {
  SergeevElement out(n);
  PBWMonomial m = PBWMonomial::one(n);
  std::vector<int> block(k);
  std::iota(block.begin(), block.end(), first);
  do {
    std::copy(block.begin(), block.end(), m.w.begin() + (first - 1));
    out.add(m, Scalar(1));
  } while (std::next_permutation(block.begin(), block.end()));
  return out;
}

// ---- phi -------------------------------------------------------------------------------

Morphism phi(const SergeevLetter& l, int n) {
  Composition thin(n, 1);
  int limit = l.kind == SergeevLetter::S ? n - 1 : n;
  if (l.index < 1 || l.index > limit) throw std::invalid_argument("letter index out of range: " + l.str());
  int j = l.index;
  switch (l.kind) {
    case SergeevLetter::S:
      return tensor_all({id(Composition(j - 1, 1)), cross(1, 1), id(Composition(n - j - 1, 1))});
    case SergeevLetter::C:
      return tensor_all({id(Composition(j - 1, 1)), wdot(1), id(Composition(n - j, 1))});
    case SergeevLetter::X:
      return tensor_all({id(Composition(j - 1, 1)), bdot(1), id(Composition(n - j, 1))});
  }
  throw std::logic_error("unreachable");
}

Morphism phi(const SergeevWord& w, int n) {
  Morphism out = id(Composition(n, 1));
  for (const auto& l : w) out = compose(out, phi(l, n));
  return out;
}

Morphism phi(const PBWMonomial& m) {
  SergeevWord w;
  for (int i : m.reduced_word()) w.push_back({SergeevLetter::S, i});
  for (int j = 1; j <= m.n(); ++j)
    if (m.c[j - 1]) w.push_back({SergeevLetter::C, j});
  for (int j = 1; j <= m.n(); ++j)
    for (int e = 0; e < m.x[j - 1]; ++e) w.push_back({SergeevLetter::X, j});
  return phi(w, m.n());
}

Morphism phi(const SergeevElement& u) {
  Composition thin(u.n(), 1);
  Morphism out(thin, thin);
  for (const auto& [m, c] : u.terms()) out += phi(m) * c;
  return out;
}

int decode_sign(int white_dots) { return (white_dots * (white_dots - 1) / 2) % 2 ? -1 : 1; }

// A basis diagram on 1^n is a permutation matrix with packets on thin legs:
// a white ball gives c_j, eta = (1^k) gives x_j^k on the leg leaving source
// strand j, and strand j ends at the row i with a_ij = 1, so w(j) = i.
SergeevElement decode(const NormalMorphism& nm) {
  int n = static_cast<int>(nm.src().size());
  Composition thin(n, 1);
  if (nm.src() != thin || nm.tgt() != thin)
    throw std::invalid_argument("decode: boundaries must be thin");
  SergeevElement out(n);
  for (const auto& [cfd, v] : nm.terms()) {
    PBWMonomial m = PBWMonomial::one(n);
    int white = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cfd.matrix()[i][j] == 0) continue;
        m.w[j] = i + 1;
        LegDecor d = cfd.decor_at(i, j);
        m.c[j] = d.nu.empty() ? 0 : 1;
        m.x[j] = static_cast<int>(d.eta.size());
        white += m.c[j];
      }
    out.add(m, v * Scalar(decode_sign(white)));
  }
  return out;
}

}  // namespace qweb
