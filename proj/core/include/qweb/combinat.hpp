// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Compositions, partitions and the combinatorics used by the
// partially-symmetric independence argument: dominance, raising operators,
// the packet gamma_{lambda,mu}, the profile nu and the graph V_{lambda,mu}.
//
// Partitions are plain integer vectors kept in canonical form (weakly
// decreasing, no trailing zeros).  Positional constructions that need zeros
// (nu, beta_alpha) say so explicitly.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace qweb {

using Composition = std::vector<int>;
using Partition = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

int weight(const std::vector<int>& v);
bool is_partition(const std::vector<int>& v);
bool is_strict_partition(const std::vector<int>& v);
bool is_strict_composition(const std::vector<int>& v);

// Drop zeros from a composition (objects of the web category are strict).
Composition strip_zeros(const Composition& c);

// (lambda_1 - 1, ..., lambda_k - 1).
std::vector<int> bar_partition(const Partition& lambda);
// bar(lambda) - rho_k with rho_k = (k-1, ..., 1, 0).
std::vector<int> tilde_partition(const Partition& lambda);
std::vector<int> rho(int k);

// Partial sums of alpha bounded by those of beta (zero padded).  Throws
// std::invalid_argument("incomparable weights") when |alpha| != |beta|.
bool dominance_leq(const std::vector<int>& alpha, const std::vector<int>& beta);
bool dominance_lt(const std::vector<int>& alpha, const std::vector<int>& beta);

// Sort decreasingly and drop zeros; negative entries throw.
Partition sort_desc(const std::vector<int>& v);
// Sort decreasingly keeping zeros (positional view).
std::vector<int> sort_desc_padded(const std::vector<int>& v);
Partition union_of(const Partition& a, const Partition& b);

// Strict lexicographic comparison, shorter-is-smaller on a common prefix.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b);

// Raising operators.  Pairs are 1-based (i, j) with i < j.
using RaisingSpec = std::vector<std::pair<int, int>>;
std::vector<int> apply_raising(const RaisingSpec& spec, std::vector<int> v);
// All subsets of {(i,j) : 1 <= i < j <= k}.
std::vector<RaisingSpec> raising_subsets(int k);

// Enumerations.  Partitions come in reverse-lex order.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1);
std::vector<Partition> partitions_bounded(int max_part, int max_weight);  // Par_a up to weight
std::vector<Partition> strict_partitions_bounded(int max_part);           // SPar_a incl. empty
std::vector<Partition> strict_partitions_exact_len(int max_part, int k);  // SPar_{a,k}
std::vector<std::vector<int>> compositions_of(int n);                     // strict compositions

// Non-negative integer matrices with row sums lambda and column sums mu,
// row-major lexicographic order.  Weight mismatch gives an empty list.
std::vector<IntMatrix> enumerate_matrices(const Composition& lambda, const Composition& mu);

// I_{k,mu} = {alpha : 0 <= alpha_j <= min(k, mu_j)}.
std::vector<std::vector<int>> index_box(int k, const Partition& mu);

// Appendix-B constructions.  lambda is strict with k parts, all <= a.
struct PairIndex {
  Partition lambda;  // strict
  Partition mu;
  int d() const;
  bool operator==(const PairIndex&) const = default;
};

// C_{k,d}: lambda in SPar_{a,k}, mu in Par_a, |bar lambda| + |mu| = d.
std::vector<PairIndex> pairs_C(int a, int k, int d);

Partition gamma_packet(const Partition& lambda, const Partition& mu);
// Zero-retaining profile nu = tilde(lambda) cup (mu - gamma), length k + l(mu).
std::vector<int> nu_profile(const Partition& lambda, const Partition& mu);

// Order on C_{k,d}; throws std::invalid_argument on mismatched (k, d).
bool pair_lt(const PairIndex& p, const PairIndex& q);

struct VGraph {
  Partition lambda, mu;
  std::vector<int> nu;                        // zero-retaining
  Partition gamma;
  std::vector<Partition> vertices;            // alpha in SPar_{a,k}
  std::vector<std::vector<std::size_t>> adj;  // undirected
  int index_of(const Partition& alpha) const;
  // beta_alpha = nu \ tilde(alpha) + gamma (componentwise, canonical form).
  Partition beta(const Partition& alpha) const;
  bool connected() const;
};

VGraph v_graph(const Partition& lambda, const Partition& mu, int a);

// Does the multiset `sub` embed into `whole` (both zero-retaining)?
bool is_sub_multiset(const std::vector<int>& sub, const std::vector<int>& whole);

}  // namespace qweb
