#include "ultra/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "ultra/constructions.hpp"

namespace ultra::oracle {

namespace {

void require_candidates(const UltraTriple& t, std::span<const Point> c) {
  check_point_set(t, c);
  if (c.empty()) throw std::invalid_argument("C must be nonempty");
}

// base^exp, or cap + 1 once it passes cap.
std::size_t capped_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

std::size_t capped_falling(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t f = n - i;
    if (f != 0 && out > cap / f) return cap + 1;
    out *= f;
  }
  return out;
}

// Calls visit(tuple) for every length-k tuple over `alphabet`, lexicographic.
template <typename Visit>
void for_each_tuple(const std::vector<Point>& alphabet, std::size_t k,
                    Visit&& visit) {
  std::vector<std::size_t> idx(k, 0);
  std::vector<Point> tuple(k, alphabet.front());
  while (true) {
    visit(tuple);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < alphabet.size()) {
        tuple[pos] = alphabet[idx[pos]];
        break;
      }
      idx[pos] = 0;
      tuple[pos] = alphabet.front();
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

std::vector<Point> sorted_copy(std::span<const Point> c) {
  std::vector<Point> out(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MaxResult brute_max_perimeter(const UltraTriple& t,
                              std::span<const Point> candidates, std::size_t k,
                              std::size_t cap) {
  require_candidates(t, candidates);
  if (t.size() > kMaxMaskPoints) {
    throw CapExceeded("brute_max_perimeter needs |E| <= 64");
  }
  const auto cands = sorted_copy(candidates);
  const std::size_t n = cands.size();
  if (n > cap) {
    throw CapExceeded("|C| = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  if (k > n) throw std::invalid_argument("k exceeds |C|");

  MaxResult result;
  bool seen = false;
  // Subsets of positions in `cands`, mapped to masks over E.
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
    if (static_cast<std::size_t>(std::popcount(sub)) != k) continue;
    Mask set = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((sub >> i) & 1U) set |= bit(cands[i]);
    }
    Rational per = perimeter_set(t, set);
    if (!seen || per > result.value) {
      seen = true;
      result.value = std::move(per);
      result.argmax.assign(1, set);
    } else if (per == result.value) {
      result.argmax.push_back(set);
    }
  }
  std::sort(result.argmax.begin(), result.argmax.end());
  return result;
}

TupleMaxResult brute_max_tuple_perimeter(const FullUltraTriple& t,
                                         std::span<const Point> candidates,
                                         std::size_t k, std::size_t cap) {
  require_candidates(t.base(), candidates);
  const auto cands = sorted_copy(candidates);
  if (capped_power(cands.size(), k, cap) > cap) {
    throw CapExceeded("|C|^k exceeds cap " + std::to_string(cap));
  }
  TupleMaxResult result;
  bool seen = false;
  for_each_tuple(cands, k, [&](const std::vector<Point>& tuple) {
    Rational per = perimeter_tuple(t, tuple);
    if (!seen || per > result.value) {
      seen = true;
      result.value = std::move(per);
      result.argmax.clear();
    } else if (per != result.value) {
      return;
    }
    auto multiset = tuple;
    std::sort(multiset.begin(), multiset.end());
    result.argmax.push_back(std::move(multiset));
  });
  std::sort(result.argmax.begin(), result.argmax.end());
  result.argmax.erase(std::unique(result.argmax.begin(), result.argmax.end()),
                      result.argmax.end());
  return result;
}

std::vector<std::vector<Point>> brute_all_greedy(
    const UltraTriple& t, std::span<const Point> candidates, std::size_t m,
    std::size_t cap) {
  require_candidates(t, candidates);
  const auto cands = sorted_copy(candidates);
  if (m > cands.size()) throw std::invalid_argument("m exceeds |C|");
  if (capped_falling(cands.size(), m, cap) > cap) {
    throw CapExceeded("arrangement count exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<Point>> out;
  for_each_tuple(cands, m, [&](const std::vector<Point>& seq) {
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return;
    }
    // Each prefix must have perimeter at least that of any other one-point
    // extension of the shorter prefix.
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Point> prefix(seq.begin(), seq.begin() + i + 1);
      const Rational chosen = perimeter_set(t, prefix);
      for (Point x : cands) {
        if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) {
          continue;
        }
        prefix.back() = x;
        const bool beaten = perimeter_set(t, prefix) > chosen;
        prefix.back() = seq[i];
        if (beaten) return;
      }
    }
    out.push_back(seq);
  });
  return out;
}

std::vector<std::vector<Point>> brute_all_greedy_subsequences(
    const FullUltraTriple& t, std::span<const Point> candidates, std::size_t m,
    std::size_t cap) {
  require_candidates(t.base(), candidates);
  const auto cands = sorted_copy(candidates);
  if (capped_power(cands.size(), m, cap) > cap) {
    throw CapExceeded("|C|^m exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<Point>> out;
  for_each_tuple(cands, m, [&](const std::vector<Point>& seq) {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Point> prefix(seq.begin(), seq.begin() + i + 1);
      const Rational chosen = perimeter_tuple(t, prefix);
      for (Point x : cands) {
        prefix.back() = x;
        if (perimeter_tuple(t, prefix) > chosen) return;
      }
    }
    out.push_back(seq);
  });
  return out;
}

UltraTriple random_ultra_triple(std::uint64_t seed, std::size_t n,
                                std::size_t depth) {
  if (n < 1 || n > 16) throw std::invalid_argument("need 1 <= n <= 16");
  if (depth < 1) throw std::invalid_argument("need depth >= 1");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto draw = [&](std::uint64_t k) {
    return static_cast<std::int64_t>(rng() % k);
  };

  EquivHierarchy h;
  h.levels.emplace_back(n, 0);
  for (std::size_t level = 1; level < depth; ++level) {
    const auto& prev = h.levels.back();
    std::map<std::pair<int, std::int64_t>, int> ids;
    std::vector<int> next(n);
    for (Point e = 0; e < n; ++e) {
      const auto key = std::make_pair(prev[e], draw(3));
      next[e] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
    h.levels.push_back(std::move(next));
  }
  std::vector<int> discrete(n);
  for (Point e = 0; e < n; ++e) discrete[e] = static_cast<int>(e);
  h.levels.push_back(std::move(discrete));

  std::int64_t half = draw(17) - 6;
  for (std::size_t i = 0; i < depth; ++i) {
    h.c.emplace_back(half, 2);
    half -= draw(3);
  }
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < n; ++i) weights.emplace_back(draw(13) - 6, 2);
  return eqrel_triple(h, std::move(weights));
}

}  // namespace ultra::oracle
