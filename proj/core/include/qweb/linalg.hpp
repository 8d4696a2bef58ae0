// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Incremental sparse row echelon form over Scalar.  Vectors are ordered maps
// from an arbitrary totally ordered key to Scalar; each stored row is
// normalised so that its smallest key (the pivot) has coefficient one.  A
// vector lies in the span iff repeatedly cancelling its leading key against
// the pivot rows empties it, so only leading-key reduction is ever needed.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qweb/scalar.hpp"

namespace qweb {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class Key>
class SparseEchelon {
 public:
  using Vec = SparseVec<Key>;
  using Combination = std::map<std::size_t, Scalar>;

  explicit SparseEchelon(bool track = false) : track_(track) {}

  // Returns true when v was independent of everything inserted so far.
  bool insert(Vec v) {
    Combination comb;
    if (track_) comb.emplace(inserted_, Scalar(1));
    ++inserted_;
    reduce(v, track_ ? &comb : nullptr);
    if (v.empty()) return false;
    Scalar lead = v.begin()->second;
    Scalar inv = Scalar(1) / lead;
    for (auto& [k, x] : v) x *= inv;
    if (track_)
      for (auto& [k, x] : comb) x *= inv;
    pivots_.emplace(v.begin()->first, rows_.size());
    rows_.push_back({std::move(v), std::move(comb)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  bool in_span(Vec v) const {
    reduce(v, nullptr);
    return v.empty();
  }

  // Coefficients c_i with v = sum_i c_i * (i-th inserted vector), if any.
  // Requires tracking.  With dependent insertions the answer is one of
  // several; callers wanting uniqueness insert independent vectors only.
  std::optional<Combination> solve(Vec v) const {
    Combination acc;
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) return std::nullopt;
      const Row& r = rows_[it->second];
      Scalar c = v.begin()->second;
      axpy(v, -c, r.vec);
      for (const auto& [idx, x] : r.comb) {
        auto [jt, fresh] = acc.try_emplace(idx, c * x);
        if (!fresh) {
          jt->second += c * x;
          if (jt->second.is_zero()) acc.erase(jt);
        }
      }
    }
    return acc;
  }

 private:
  struct Row {
    Vec vec;
    Combination comb;
  };

  void reduce(Vec& v, Combination* comb) const {
    // Cancel leading keys until the leading key is not a pivot.
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) return;
      const Row& r = rows_[p->second];
      Scalar c = it->second;
      axpy(v, -c, r.vec);
      if (comb)
        for (const auto& [idx, x] : r.comb) {
          auto [jt, fresh] = comb->try_emplace(idx, -c * x);
          if (!fresh) {
            jt->second -= c * x;
            if (jt->second.is_zero()) comb->erase(jt);
          }
        }
      it = v.begin();
    }
  }

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::map<Key, std::size_t> pivots_;
};

}  // namespace qweb
