#include "ultra/bhargava.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "ultra/constructions.hpp"
#include "ultra/greedy.hpp"

namespace ultra {

namespace {

// v_p of the product (x - prior_1) ... (x - prior_k).
Valuation product_valuation(std::int64_t p, std::span<const std::int64_t> prior,
                            std::int64_t x) {
  Valuation total(0);
  for (auto c : prior) {
    std::int64_t diff = 0;
    if (__builtin_sub_overflow(x, c, &diff)) {
      throw std::overflow_error("difference overflows int64");
    }
    total += vp(p, diff);
    if (total.is_infinite()) break;
  }
  return total;
}

std::vector<std::int64_t> sorted_unique_set(
    const std::vector<std::int64_t>& set) {
  std::vector<std::int64_t> out = set;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("E has repeated elements");
  }
  return out;
}

}  // namespace

Valuation vp(std::int64_t p, std::int64_t x) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (x == 0) return Valuation::infinite();
  std::int64_t k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return Valuation(k);
}

std::vector<std::int64_t> pm_ordering(const std::vector<std::int64_t>& set,
                                      std::int64_t p, std::size_t m,
                                      OrderingTieBreak) {
  const auto elems = sorted_unique_set(set);
  if (elems.empty() && m > 0) {
    throw std::invalid_argument("E must be nonempty");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  std::vector<std::int64_t> seq;
  seq.reserve(m);
  while (seq.size() < m) {
    // Elements are scanned in increasing order, so strict improvement keeps
    // the lowest value among ties.
    std::int64_t best = elems.front();
    Valuation best_val = product_valuation(p, seq, best);
    for (auto x : elems) {
      Valuation v = product_valuation(p, seq, x);
      if (v < best_val) {
        best = x;
        best_val = v;
      }
    }
    seq.push_back(best);
  }
  return seq;
}

bool is_pm_ordering(const std::vector<std::int64_t>& set, std::int64_t p,
                    const std::vector<std::int64_t>& seq) {
  const auto elems = sorted_unique_set(set);
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!std::binary_search(elems.begin(), elems.end(), seq[i])) return false;
    const std::span<const std::int64_t> prior(seq.data(), i);
    const Valuation chosen = product_valuation(p, prior, seq[i]);
    for (auto x : elems) {
      if (product_valuation(p, prior, x) < chosen) return false;
    }
  }
  return true;
}

bool check_equivalence(const std::vector<std::int64_t>& set, std::int64_t p,
                       const std::vector<std::int64_t>& seq) {
  const auto triple = padic_log_triple(set, p);
  std::vector<Point> indices;
  indices.reserve(seq.size());
  for (auto x : seq) {
    const auto it = std::find(set.begin(), set.end(), x);
    if (it == set.end()) {
      throw std::invalid_argument(std::to_string(x) + " is not in E");
    }
    indices.push_back(static_cast<Point>(it - set.begin()));
  }
  std::vector<Point> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("sequence entries must be distinct");
  }
  std::vector<Point> all(set.size());
  for (Point i = 0; i < all.size(); ++i) all[i] = i;

  const bool ordering = is_pm_ordering(set, p, seq);
  const bool greedy = is_greedy_permutation(triple, all, indices);
  if (ordering != greedy) {
    throw std::logic_error("(P,m)-ordering and greedy permutation verdicts "
                           "disagree");
  }
  return ordering;
}

}  // namespace ultra
