#include "ultra/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ultra/bhargava.hpp"

namespace ultra {

namespace {

std::vector<Rational> resolve_weights(std::vector<Rational> weights,
                                      std::size_t n) {
  if (weights.empty()) return std::vector<Rational>(n);
  if (weights.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " weights, got " +
                                std::to_string(weights.size()));
  }
  return weights;
}

std::vector<std::string> integer_labels(const std::vector<std::int64_t>& pts) {
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (auto x : pts) labels.push_back(std::to_string(x));
  return labels;
}

std::int64_t checked_difference(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("difference of points overflows int64");
  }
  return out;
}

void require_distinct(const std::vector<std::int64_t>& pts) {
  std::vector<std::int64_t> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("points must be distinct");
  }
}

// a | b, with 0 | b iff b == 0.
bool divides(std::int64_t a, std::int64_t b) {
  if (a == 0) return b == 0;
  if (a == -1) return true;
  return b % a == 0;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q <= p / q; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

UltraTriple constant_triple(std::size_t n, std::vector<Rational> weights) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return UltraTriple::from_function(std::move(labels),
                                    resolve_weights(std::move(weights), n),
                                    [](Point, Point) { return Rational(1); });
}

UltraTriple mod_triple(const std::vector<std::int64_t>& points, std::int64_t m,
                       const Rational& eps, const Rational& alpha,
                       std::vector<Rational> weights) {
  if (eps > alpha) throw std::invalid_argument("mod triple needs eps <= alpha");
  require_distinct(points);
  return UltraTriple::from_function(
      integer_labels(points), resolve_weights(std::move(weights), points.size()),
      [&](Point i, Point j) {
        return divides(m, checked_difference(points[i], points[j])) ? eps
                                                                     : alpha;
      });
}

UltraTriple padic_triple(const std::vector<std::int64_t>& points,
                         std::int64_t p, std::vector<Rational> weights) {
  require_prime(p);
  require_distinct(points);
  const Rational base(p);
  return UltraTriple::from_function(
      integer_labels(points), resolve_weights(std::move(weights), points.size()),
      [&](Point i, Point j) {
        const auto v = vp(p, checked_difference(points[i], points[j]));
        return base.pow(-v.value());
      });
}

UltraTriple padic_log_triple(const std::vector<std::int64_t>& points,
                             std::int64_t p, std::vector<Rational> weights) {
  require_prime(p);
  require_distinct(points);
  return UltraTriple::from_function(
      integer_labels(points), resolve_weights(std::move(weights), points.size()),
      [&](Point i, Point j) {
        return Rational(-vp(p, checked_difference(points[i], points[j])).value());
      });
}

std::optional<std::size_t> chain_valuation(const std::vector<std::int64_t>& r,
                                           std::int64_t x) {
  // Zero is divisible by every entry, including the implicit zero tail.
  if (x == 0) return std::nullopt;
  // Along a divisibility chain the entries dividing x form a prefix.
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!divides(r[i], x)) break;
    best = i;
  }
  return best;
}

UltraTriple rseq_triple(const std::vector<std::int64_t>& points,
                        const std::vector<std::int64_t>& r,
                        const std::vector<Rational>& c,
                        std::vector<Rational> weights) {
  require_distinct(points);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (!divides(r[i], r[i + 1])) {
      throw std::invalid_argument("r is not a divisibility chain at index " +
                                  std::to_string(i));
    }
  }
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] < c[i + 1]) {
      throw std::invalid_argument("c is not weakly decreasing at index " +
                                  std::to_string(i));
    }
  }
  return UltraTriple::from_function(
      integer_labels(points), resolve_weights(std::move(weights), points.size()),
      [&](Point i, Point j) {
        const auto diff = checked_difference(points[i], points[j]);
        const auto v = chain_valuation(r, diff);
        if (!v) {
          throw std::invalid_argument("v_r(" + std::to_string(diff) +
                                      ") is undefined");
        }
        if (*v >= c.size()) {
          throw std::invalid_argument("c too short: need index " +
                                      std::to_string(*v));
        }
        return c[*v];
      });
}

UltraTriple eqrel_triple(const EquivHierarchy& h, std::vector<Rational> weights,
                         std::vector<std::string> labels) {
  if (h.levels.empty()) throw std::invalid_argument("hierarchy has no levels");
  const std::size_t n = h.size();
  for (const auto& level : h.levels) {
    if (level.size() != n) {
      throw std::invalid_argument("hierarchy levels differ in size");
    }
  }
  for (Point e = 0; e < n; ++e) {
    if (!h.equivalent(0, e, 0)) {
      throw std::invalid_argument("assumption (A) fails: level 0 is not total");
    }
  }
  for (std::size_t i = 1; i < h.levels.size(); ++i) {
    for (Point e = 0; e < n; ++e) {
      for (Point f = 0; f < e; ++f) {
        if (h.equivalent(i, e, f) && !h.equivalent(i - 1, e, f)) {
          throw std::invalid_argument(
              "assumption (B) fails: level " + std::to_string(i) +
              " does not refine level " + std::to_string(i - 1));
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < h.c.size(); ++i) {
    if (h.c[i] < h.c[i + 1]) {
      throw std::invalid_argument("c is not weakly decreasing at index " +
                                  std::to_string(i));
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return UltraTriple::from_function(
      std::move(labels), resolve_weights(std::move(weights), n),
      [&](Point e, Point f) {
        std::size_t top = 0;
        while (top + 1 < h.levels.size() && h.equivalent(top + 1, e, f)) ++top;
        if (top + 1 == h.levels.size()) {
          throw std::invalid_argument(
              "assumption (C) fails: points " + std::to_string(f) + " and " +
              std::to_string(e) + " are never separated");
        }
        if (top >= h.c.size()) {
          throw std::invalid_argument("c too short: need index " +
                                      std::to_string(top));
        }
        return h.c[top];
      });
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> out;
};

Adjacency check_tree(const WeightedTree& tree) {
  const std::size_t n = tree.vertices.size();
  if (n == 0) throw std::invalid_argument("tree has no vertices");
  if (tree.edges.size() + 1 != n) {
    throw std::invalid_argument("tree on " + std::to_string(n) +
                                " vertices needs " + std::to_string(n - 1) +
                                " edges, got " +
                                std::to_string(tree.edges.size()));
  }
  if (tree.root >= n) throw std::invalid_argument("root out of range");
  Adjacency adj;
  adj.out.resize(n);
  for (const auto& e : tree.edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop in tree");
    if (e.weight.sign() < 0) {
      throw std::invalid_argument("negative edge weight");
    }
    adj.out[e.u].emplace_back(e.v, &e.weight);
    adj.out[e.v].emplace_back(e.u, &e.weight);
  }
  // n - 1 edges plus connectivity implies acyclic.
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj.out[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("tree is disconnected");
  return adj;
}

std::vector<Rational> distances_from(const Adjacency& adj, std::size_t source) {
  std::vector<Rational> dist(adj.out.size());
  std::vector<bool> seen(adj.out.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj.out[v]) {
      if (!seen[u]) {
        seen[u] = true;
        dist[u] = dist[v] + *w;
        stack.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

Rational tree_path_length(const WeightedTree& tree, std::size_t from,
                          std::size_t to) {
  const Adjacency adj = check_tree(tree);
  if (from >= tree.vertices.size() || to >= tree.vertices.size()) {
    throw std::out_of_range("vertex out of range");
  }
  return distances_from(adj, from)[to];
}

UltraTriple tree_triple(const WeightedTree& tree) {
  const Adjacency adj = check_tree(tree);
  std::vector<std::size_t> leaves = tree.leaves;
  if (leaves.empty()) {
    for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
      if (adj.out[v].size() <= 1) leaves.push_back(v);
    }
  }
  for (auto v : leaves) {
    if (v >= tree.vertices.size()) {
      throw std::invalid_argument("leaf out of range");
    }
  }
  const auto from_root = distances_from(adj, tree.root);
  std::vector<std::vector<Rational>> from_leaf;
  from_leaf.reserve(leaves.size());
  for (auto v : leaves) from_leaf.push_back(distances_from(adj, v));

  std::vector<std::string> labels;
  std::vector<Rational> weights;
  for (auto v : leaves) {
    labels.push_back(tree.vertices[v]);
    weights.push_back(from_root[v]);
  }
  return UltraTriple::from_function(
      std::move(labels), std::move(weights), [&](Point i, Point j) {
        return from_leaf[i][leaves[j]] - from_root[leaves[i]] -
               from_root[leaves[j]];
      });
}

FullUltraTriple extend_to_full(const UltraTriple& t, const Rational& n) {
  for (const auto& d : t.lower_triangle()) {
    if (n > d) {
      throw std::invalid_argument("self-distance " + n.str() +
                                  " exceeds pairwise distance " + d.str());
    }
  }
  return FullUltraTriple(t, std::vector<Rational>(t.size(), n));
}

FullUltraTriple shift_distances(const FullUltraTriple& t,
                                const Rational& shift) {
  std::vector<Rational> tri = t.base().lower_triangle();
  for (auto& d : tri) d += shift;
  return FullUltraTriple(
      UltraTriple(t.base().labels(), t.base().weights(), std::move(tri)),
      t.self_distances());
}

}  // namespace ultra
