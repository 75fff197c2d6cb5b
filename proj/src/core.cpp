#include "ultra/core.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace ultra {

namespace {

std::size_t tri_index(Point a, Point b) {
  if (a < b) std::swap(a, b);
  return a * (a - 1) / 2 + b;
}

void check_index(std::size_t n, Point p) {
  if (p >= n) {
    throw std::out_of_range("point index " + std::to_string(p) +
                            " out of range for ground set of size " +
                            std::to_string(n));
  }
}

}  // namespace

Mask mask_of(std::span<const Point> points) {
  Mask m = 0;
  for (Point p : points) {
    if (p >= kMaxMaskPoints) throw std::out_of_range("point exceeds mask width");
    m |= bit(p);
  }
  return m;
}

std::vector<Point> points_of(Mask mask) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<Point>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

UltraTriple::UltraTriple(std::vector<std::string> labels,
                         std::vector<Rational> weights,
                         std::vector<Rational> lower_triangle)
    : labels_(std::move(labels)),
      weights_(std::move(weights)),
      dist_(std::move(lower_triangle)) {
  const std::size_t n = labels_.size();
  if (weights_.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " weights, got " +
                                std::to_string(weights_.size()));
  }
  const std::size_t pairs = n == 0 ? 0 : n * (n - 1) / 2;
  if (dist_.size() != pairs) {
    throw std::invalid_argument("expected " + std::to_string(pairs) +
                                " distances, got " +
                                std::to_string(dist_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label '" + l + "'");
    }
  }
}

std::optional<Point> UltraTriple::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Point>(it - labels_.begin());
}

const Rational& UltraTriple::distance(Point a, Point b) const {
  assert(a != b && a < size() && b < size());
  return dist_[tri_index(a, b)];
}

FullUltraTriple::FullUltraTriple(UltraTriple base,
                                 std::vector<Rational> self_distances)
    : base_(std::move(base)), self_(std::move(self_distances)) {
  if (self_.size() != base_.size()) {
    throw std::invalid_argument("expected " + std::to_string(base_.size()) +
                                " self-distances, got " +
                                std::to_string(self_.size()));
  }
}

ValidationReport validate(const UltraTriple& t) {
  ValidationReport report;
  const std::size_t n = t.size();
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      for (Point c = b + 1; c < n; ++c) {
        const Rational& ab = t.distance(a, b);
        const Rational& ac = t.distance(a, c);
        const Rational& bc = t.distance(b, c);
        // The two longest sides must be equal; flag the strictly longest one.
        if (ab > ac && ab > bc) {
          report.violations.push_back({a, b, c, ab, max(ac, bc)});
        } else if (ac > ab && ac > bc) {
          report.violations.push_back({a, c, b, ac, max(ab, bc)});
        } else if (bc > ab && bc > ac) {
          report.violations.push_back({b, c, a, bc, max(ab, ac)});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(const FullUltraTriple& t) {
  ValidationReport report = validate(t.base());
  const std::size_t n = t.size();
  for (Point a = 0; a < n; ++a) {
    for (Point c = 0; c < n; ++c) {
      if (c == a) continue;
      if (t.distance(a, a) > t.distance(a, c)) {
        report.violations.push_back(
            {a, a, c, t.distance(a, a), t.distance(a, c)});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

void check_point_set(const UltraTriple& t, std::span<const Point> set) {
  std::vector<bool> seen(t.size(), false);
  for (Point p : set) {
    check_index(t.size(), p);
    if (seen[p]) {
      throw std::invalid_argument("point " + std::to_string(p) +
                                  " repeated in set");
    }
    seen[p] = true;
  }
}

Rational perimeter_set(const UltraTriple& t, std::span<const Point> set) {
  check_point_set(t, set);
  Rational total;
  for (std::size_t i = 0; i < set.size(); ++i) {
    total += t.weight(set[i]);
    for (std::size_t j = 0; j < i; ++j) total += t.distance(set[i], set[j]);
  }
  return total;
}

Rational perimeter_set(const UltraTriple& t, Mask set) {
  if (t.size() < kMaxMaskPoints && (set >> t.size()) != 0) {
    throw std::out_of_range("mask has points outside the ground set");
  }
  const auto points = points_of(set);
  return perimeter_set(t, std::span<const Point>(points));
}

Rational perimeter_tuple(const FullUltraTriple& t,
                         std::span<const Point> tuple) {
  for (Point p : tuple) check_index(t.size(), p);
  Rational total;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    total += t.weight(tuple[i]);
    for (std::size_t j = 0; j < i; ++j) total += t.distance(tuple[i], tuple[j]);
  }
  return total;
}

std::vector<Point> projections(const UltraTriple& t, std::span<const Point> set,
                               Point v) {
  if (set.empty()) throw std::invalid_argument("projection onto an empty set");
  check_point_set(t, set);
  check_index(t.size(), v);
  if (std::find(set.begin(), set.end(), v) != set.end()) return {v};

  std::vector<Point> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> best;
  const Rational* best_dist = nullptr;
  for (Point c : sorted) {
    const Rational& d = t.distance(v, c);
    if (best_dist == nullptr || d < *best_dist) {
      best.clear();
      best_dist = &d;
    }
    if (d == *best_dist) best.push_back(c);
  }
  return best;
}

}  // namespace ultra
