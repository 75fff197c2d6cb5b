#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ultra/core.hpp"
#include "ultra/greedy.hpp"

namespace ultra::oracle {

// Exhaustive reference implementations. None of these share step logic
// with the greedy module; they only call the core perimeter functions.

struct MaxResult {
  Rational value;
  /// Every k-subset attaining `value`, as masks over E, ascending.
  std::vector<Mask> argmax;
};

struct TupleMaxResult {
  Rational value;
  /// Every attaining k-tuple up to reordering, each sorted, ascending.
  std::vector<std::vector<Point>> argmax;
};

/// Maximum perimeter over all k-subsets of C. Requires |E| <= 64 and
/// |C| <= cap.
MaxResult brute_max_perimeter(const UltraTriple& triple,
                              std::span<const Point> candidates, std::size_t k,
                              std::size_t cap = 20);

/// Maximum perimeter over all |C|^k tuples. Requires |C|^k <= cap.
TupleMaxResult brute_max_tuple_perimeter(const FullUltraTriple& triple,
                                         std::span<const Point> candidates,
                                         std::size_t k,
                                         std::size_t cap = 1'000'000);

/// All m-arrangements of C that satisfy the greedy step inequality on set
/// perimeters, lexicographic. Requires |C|(|C|-1)...(|C|-m+1) <= cap.
std::vector<std::vector<Point>> brute_all_greedy(
    const UltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, std::size_t cap = 1'000'000);

/// All m-tuples of C that satisfy the greedy step inequality on tuple
/// perimeters, lexicographic. Requires |C|^m <= cap.
std::vector<std::vector<Point>> brute_all_greedy_subsequences(
    const FullUltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, std::size_t cap = 1'000'000);

/// Random valid triple from a random chain of partitions: `depth` coarse
/// levels (level 0 is the whole set) followed by the discrete partition,
/// weakly decreasing half-integer distances and half-integer weights in
/// [-3, 3]. Deterministic in the seed. Requires 1 <= n <= 16, depth >= 1.
UltraTriple random_ultra_triple(std::uint64_t seed, std::size_t n,
                                std::size_t depth);

}  // namespace ultra::oracle
