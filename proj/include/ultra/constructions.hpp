#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultra/core.hpp"

namespace ultra {

/// Builders for the standard families of (full) ultra triples.
///
/// Every builder takes a weight vector that must either be empty (all
/// weights zero) or have one entry per point. Integer-indexed families
/// label each point by its decimal value.

/// d(a,b) = 1 for all distinct a, b. Labels are "0", ..., "n-1".
UltraTriple constant_triple(std::size_t n, std::vector<Rational> weights = {});

/// d(a,b) = eps if a = b mod m, alpha otherwise. Requires eps <= alpha.
/// m = 0 means congruence is equality.
UltraTriple mod_triple(const std::vector<std::int64_t>& points, std::int64_t m,
                       const Rational& eps, const Rational& alpha,
                       std::vector<Rational> weights = {});

/// p-adic metric d(a,b) = p^(-v_p(a-b)). Points must be distinct.
UltraTriple padic_triple(const std::vector<std::int64_t>& points,
                         std::int64_t p, std::vector<Rational> weights = {});

/// d'(a,b) = -v_p(a-b).
UltraTriple padic_log_triple(const std::vector<std::int64_t>& points,
                             std::int64_t p,
                             std::vector<Rational> weights = {});

/// v_r(x) = max{ i : r_i | x } for the finite chain r_0 | r_1 | ... |
/// r_{L-1}; entries past the end are taken to be 0. Returns nullopt when no
/// r_i divides x.
std::optional<std::size_t> chain_valuation(const std::vector<std::int64_t>& r,
                                           std::int64_t x);

/// d(a,b) = c[v_r(a-b)]. Throws if the chain is not a divisibility chain,
/// c is not weakly decreasing, some v_r(a-b) is undefined or c is too short.
UltraTriple rseq_triple(const std::vector<std::int64_t>& points,
                        const std::vector<std::int64_t>& r,
                        const std::vector<Rational>& c,
                        std::vector<Rational> weights = {});

/// A finite chain of equivalence relations on {0, ..., n-1}. Level i is
/// given as a block id per point; two points are i-equivalent iff their
/// ids at level i agree.
struct EquivHierarchy {
  std::vector<std::vector<int>> levels;
  std::vector<Rational> c;

  std::size_t size() const { return levels.empty() ? 0 : levels[0].size(); }
  bool equivalent(std::size_t level, Point e, Point f) const {
    return levels[level][e] == levels[level][f];
  }
};

/// d(e,f) = c[max{ i : e ~_i f }]. Throws std::invalid_argument naming the
/// failed assumption: level 0 not total, a level not refining the previous
/// one, a pair never separated, c increasing or too short.
UltraTriple eqrel_triple(const EquivHierarchy& h,
                         std::vector<Rational> weights = {},
                         std::vector<std::string> labels = {});

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;
};

/// Undirected edge-weighted tree with a chosen root. `leaves` selects the
/// ground set; when empty, every vertex of degree <= 1 is used.
struct WeightedTree {
  std::vector<std::string> vertices;
  std::vector<TreeEdge> edges;
  std::size_t root = 0;
  std::vector<std::size_t> leaves;
};

/// Leaf-set triple with w(x) = lambda(x, r) and
/// d(x,y) = lambda(x,y) - lambda(x,r) - lambda(y,r), where lambda sums edge
/// weights along tree paths. Throws on cycles, disconnection or negative
/// edge weights.
UltraTriple tree_triple(const WeightedTree& tree);

/// Path-sum distance between two tree vertices.
Rational tree_path_length(const WeightedTree& tree, std::size_t from,
                          std::size_t to);

/// Adds self-distance N to every point. Requires N <= every pairwise
/// distance.
FullUltraTriple extend_to_full(const UltraTriple& triple, const Rational& n);

/// Adds R to every off-diagonal distance; the diagonal is unchanged.
FullUltraTriple shift_distances(const FullUltraTriple& triple,
                                const Rational& shift);

bool is_prime(std::int64_t p);

}  // namespace ultra
