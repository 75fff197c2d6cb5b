#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ultra/core.hpp"

namespace ultra {

/// How ties between equally good candidates are resolved.
enum class TieBreak {
  kLowestIndex,   ///< Take the smallest point index; one deterministic trace.
  kEnumerateAll,  ///< Branch over every maximizer.
};

enum class TraceMode { kPermutation, kSubsequence };

/// An ordered selection together with the perimeter gained at each step:
/// increments[j] = w(c_j) + sum_{i<j} d(c_i, c_j).
struct GreedyTrace {
  std::vector<Point> points;
  std::vector<Rational> increments;
  TraceMode mode = TraceMode::kPermutation;

  /// Running sums of the increments; entry k is the perimeter of the first
  /// k points (entry 0 is 0).
  std::vector<Rational> prefix_perimeters() const;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

/// Raised when an enumeration would exceed its configured bound.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Greedy m-permutations ------------------------------------------------------

/// Picks m distinct points of `candidates`, each maximizing the perimeter
/// of the chosen set, ties to the lowest index. Throws if m > |C|.
GreedyTrace greedy_permutation(const UltraTriple& triple,
                               std::span<const Point> candidates,
                               std::size_t m);

/// One trace for kLowestIndex, all of them (lexicographic) for
/// kEnumerateAll.
std::vector<GreedyTrace> greedy_permutations(
    const UltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, TieBreak tie_break,
    std::size_t cap = kDefaultEnumerationCap);

bool is_greedy_permutation(const UltraTriple& triple,
                           std::span<const Point> candidates,
                           std::span<const Point> seq);

/// Continues a greedy prefix to length m with lowest-index choices.
/// Throws if the prefix is not greedy or m > |C|.
GreedyTrace extend_greedy(const UltraTriple& triple,
                          std::span<const Point> candidates,
                          const GreedyTrace& prefix, std::size_t m);

/// Every greedy m-permutation, sorted lexicographically by point index.
/// Throws CapExceeded once more than `cap` sequences would be produced.
std::vector<std::vector<Point>> all_greedy_permutations(
    const UltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, std::size_t cap = kDefaultEnumerationCap);

/// The choice-independent k-th increment of greedy permutations,
/// 1 <= k <= |C|.
Rational nu_bar(const UltraTriple& triple, std::span<const Point> candidates,
                std::size_t k);

// Greedy m-subsequences ------------------------------------------------------

/// Sampling with replacement: every point of C competes at every step.
/// Throws if C is empty.
GreedyTrace greedy_subsequence(const FullUltraTriple& triple,
                               std::span<const Point> candidates,
                               std::size_t m);

std::vector<GreedyTrace> greedy_subsequences(
    const FullUltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, TieBreak tie_break,
    std::size_t cap = kDefaultEnumerationCap);

bool is_greedy_subsequence(const FullUltraTriple& triple,
                           std::span<const Point> candidates,
                           std::span<const Point> seq);

std::vector<std::vector<Point>> all_greedy_subsequences(
    const FullUltraTriple& triple, std::span<const Point> candidates,
    std::size_t m, std::size_t cap = kDefaultEnumerationCap);

/// The choice-independent k-th increment of greedy subsequences, k >= 1.
Rational nu(const FullUltraTriple& triple, std::span<const Point> candidates,
            std::size_t k);

// Clones ---------------------------------------------------------------------

/// Replaces each point e by copies (e,1), ..., (e,N) with the weight and
/// all distances (diagonal included) of e. Copy r of point e has index
/// e * N + (r - 1) and label "<label>#<r>".
FullUltraTriple clone_triple(const FullUltraTriple& triple, std::size_t copies);

inline Point clone_index(Point original, std::size_t copy, std::size_t copies) {
  return original * copies + (copy - 1);
}

// Invariants -----------------------------------------------------------------

/// nu_bar_k(C) <= w(c_j) + sum_{i in 1..k, i != j} d(c_i, c_j) for a greedy
/// permutation trace, 1 <= j <= k <= length. Throws on index violations or
/// a non-greedy trace.
bool nu_bar_inequality_check(const UltraTriple& triple,
                             std::span<const Point> candidates,
                             const GreedyTrace& trace, std::size_t k,
                             std::size_t j);

/// Subsequence analogue with nu_k(C); a permutation-mode trace is checked
/// against the underlying triple instead.
bool nu_bar_inequality_check(const FullUltraTriple& triple,
                             std::span<const Point> candidates,
                             const GreedyTrace& trace, std::size_t k,
                             std::size_t j);

}  // namespace ultra
