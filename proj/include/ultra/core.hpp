#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

/// Dense index of a point in [0, |E|). Labels are presentation only.
using Point = std::size_t;

/// Subset of a ground set of at most 64 points; bit i set means point i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskPoints = 64;

Mask mask_of(std::span<const Point> points);
std::vector<Point> points_of(Mask mask);
inline Mask bit(Point p) { return Mask{1} << p; }
inline bool contains(Mask mask, Point p) { return (mask >> p) & 1U; }

/// Finite ground set with a weight per point and a symmetric distance on
/// distinct pairs, stored once per unordered pair.
///
/// The constructor checks shapes and label uniqueness only. Whether the
/// ultrametric inequality holds is reported by validate(), so that broken
/// inputs can still be inspected.
class UltraTriple {
 public:
  UltraTriple() = default;

  /// `lower_triangle` is row-major: row i holds d(i,0), ..., d(i,i-1).
  UltraTriple(std::vector<std::string> labels, std::vector<Rational> weights,
              std::vector<Rational> lower_triangle);

  /// Builds the lower triangle by calling `dist(i, j)` for every j < i.
  template <typename DistanceFn>
  static UltraTriple from_function(std::vector<std::string> labels,
                                   std::vector<Rational> weights,
                                   DistanceFn&& dist) {
    std::vector<Rational> tri;
    const std::size_t n = labels.size();
    tri.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (Point i = 0; i < n; ++i) {
      for (Point j = 0; j < i; ++j) tri.push_back(dist(i, j));
    }
    return UltraTriple(std::move(labels), std::move(weights), std::move(tri));
  }

  std::size_t size() const { return labels_.size(); }

  const std::string& label(Point p) const { return labels_[p]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Point> find(std::string_view label) const;

  const Rational& weight(Point p) const { return weights_[p]; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// d(a, b) for a != b.
  const Rational& distance(Point a, Point b) const;
  const std::vector<Rational>& lower_triangle() const { return dist_; }

  friend bool operator==(const UltraTriple&, const UltraTriple&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> weights_;
  std::vector<Rational> dist_;
};

/// Ultra triple whose distance is also defined on the diagonal.
class FullUltraTriple {
 public:
  FullUltraTriple() = default;
  FullUltraTriple(UltraTriple base, std::vector<Rational> self_distances);

  /// The underlying triple with the diagonal forgotten.
  const UltraTriple& base() const { return base_; }

  std::size_t size() const { return base_.size(); }
  const std::string& label(Point p) const { return base_.label(p); }
  const Rational& weight(Point p) const { return base_.weight(p); }
  const std::vector<Rational>& self_distances() const { return self_; }

  /// d(a, b) for any a, b including a == b.
  const Rational& distance(Point a, Point b) const {
    return a == b ? self_[a] : base_.distance(a, b);
  }

  friend bool operator==(const FullUltraTriple&,
                         const FullUltraTriple&) = default;

 private:
  UltraTriple base_;
  std::vector<Rational> self_;
};

/// A failed instance of d(a,b) <= max{d(a,c), d(b,c)}.
/// For full triples a == b marks a diagonal violation d(a,a) > d(a,c).
struct Violation {
  Point a = 0;
  Point b = 0;
  Point c = 0;
  Rational lhs;
  Rational rhs;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks the ultrametric inequality on every triangle. Reports one
/// violation per offending unordered triple; never throws.
ValidationReport validate(const UltraTriple& triple);

/// As above, additionally checking d(a,a) <= d(a,c) for all a != c, which
/// together with the distinct-point case covers every (a,b,c) in E^3.
ValidationReport validate(const FullUltraTriple& triple);

/// Sum of weights plus all pairwise distances within a set of distinct
/// points. Throws std::out_of_range / std::invalid_argument on bad indices
/// or repeated points.
Rational perimeter_set(const UltraTriple& triple, std::span<const Point> set);
Rational perimeter_set(const UltraTriple& triple, Mask set);

/// Perimeter of a tuple: sum of weights plus d(t_i, t_j) over i < j.
/// Repeated entries use the self-distance.
Rational perimeter_tuple(const FullUltraTriple& triple,
                         std::span<const Point> tuple);

/// proj_C(v): {v} if v is in C, otherwise every c in C at minimum distance
/// from v, in increasing index order. Throws if C is empty.
std::vector<Point> projections(const UltraTriple& triple,
                               std::span<const Point> set, Point v);

/// Throws unless every point is in range and no point repeats.
void check_point_set(const UltraTriple& triple, std::span<const Point> set);

}  // namespace ultra
