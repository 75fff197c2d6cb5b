#include "ultra/greedy.hpp"

#include <algorithm>
#include <string>

namespace ultra {

namespace {

std::vector<Point> normalized(const UltraTriple& t,
                              std::span<const Point> candidates) {
  check_point_set(t, candidates);
  std::vector<Point> out(candidates.begin(), candidates.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Perimeter gained by adding x to `chosen` (x not in chosen).
Rational set_increment(const UltraTriple& t, std::span<const Point> chosen,
                       Point x) {
  Rational inc = t.weight(x);
  for (Point c : chosen) inc += t.distance(c, x);
  return inc;
}

// Perimeter gained by appending x to the tuple `chosen` (repeats allowed).
Rational tuple_increment(const FullUltraTriple& t,
                         std::span<const Point> chosen, Point x) {
  Rational inc = t.weight(x);
  for (Point c : chosen) inc += t.distance(c, x);
  return inc;
}

bool in_sorted(const std::vector<Point>& sorted, Point p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

class PermutationSearch {
 public:
  PermutationSearch(const UltraTriple& t, std::vector<Point> candidates,
                    std::size_t m, std::size_t cap)
      : t_(t), cands_(std::move(candidates)), m_(m), cap_(cap),
        used_(t.size(), false) {}

  std::vector<std::vector<Point>> run() {
    recurse();
    return std::move(out_);
  }

 private:
  void recurse() {
    if (prefix_.size() == m_) {
      if (out_.size() == cap_) {
        throw CapExceeded("more than " + std::to_string(cap_) +
                          " greedy permutations");
      }
      out_.push_back(prefix_);
      return;
    }
    std::vector<Point> best;
    Rational best_inc;
    for (Point x : cands_) {
      if (used_[x]) continue;
      Rational inc = set_increment(t_, prefix_, x);
      if (best.empty() || inc > best_inc) {
        best.assign(1, x);
        best_inc = std::move(inc);
      } else if (inc == best_inc) {
        best.push_back(x);
      }
    }
    for (Point x : best) {
      used_[x] = true;
      prefix_.push_back(x);
      recurse();
      prefix_.pop_back();
      used_[x] = false;
    }
  }

  const UltraTriple& t_;
  std::vector<Point> cands_;
  std::size_t m_;
  std::size_t cap_;
  std::vector<bool> used_;
  std::vector<Point> prefix_;
  std::vector<std::vector<Point>> out_;
};

class SubsequenceSearch {
 public:
  SubsequenceSearch(const FullUltraTriple& t, std::vector<Point> candidates,
                    std::size_t m, std::size_t cap)
      : t_(t), cands_(std::move(candidates)), m_(m), cap_(cap) {}

  std::vector<std::vector<Point>> run() {
    recurse();
    return std::move(out_);
  }

 private:
  void recurse() {
    if (prefix_.size() == m_) {
      if (out_.size() == cap_) {
        throw CapExceeded("more than " + std::to_string(cap_) +
                          " greedy subsequences");
      }
      out_.push_back(prefix_);
      return;
    }
    std::vector<Point> best;
    Rational best_inc;
    for (Point x : cands_) {
      Rational inc = tuple_increment(t_, prefix_, x);
      if (best.empty() || inc > best_inc) {
        best.assign(1, x);
        best_inc = std::move(inc);
      } else if (inc == best_inc) {
        best.push_back(x);
      }
    }
    for (Point x : best) {
      prefix_.push_back(x);
      recurse();
      prefix_.pop_back();
    }
  }

  const FullUltraTriple& t_;
  std::vector<Point> cands_;
  std::size_t m_;
  std::size_t cap_;
  std::vector<Point> prefix_;
  std::vector<std::vector<Point>> out_;
};

GreedyTrace permutation_trace(const UltraTriple& t, std::vector<Point> seq) {
  GreedyTrace trace;
  trace.mode = TraceMode::kPermutation;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    trace.increments.push_back(
        set_increment(t, std::span<const Point>(seq.data(), i), seq[i]));
  }
  trace.points = std::move(seq);
  return trace;
}

GreedyTrace subsequence_trace(const FullUltraTriple& t,
                              std::vector<Point> seq) {
  GreedyTrace trace;
  trace.mode = TraceMode::kSubsequence;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    trace.increments.push_back(
        tuple_increment(t, std::span<const Point>(seq.data(), i), seq[i]));
  }
  trace.points = std::move(seq);
  return trace;
}

void extend_permutation(const UltraTriple& t, const std::vector<Point>& cands,
                        GreedyTrace& trace, std::size_t m) {
  std::vector<bool> used(t.size(), false);
  for (Point p : trace.points) used[p] = true;
  while (trace.points.size() < m) {
    const Point* best = nullptr;
    Rational best_inc;
    for (const Point& x : cands) {
      if (used[x]) continue;
      Rational inc = set_increment(t, trace.points, x);
      if (best == nullptr || inc > best_inc) {
        best = &x;
        best_inc = std::move(inc);
      }
    }
    used[*best] = true;
    trace.points.push_back(*best);
    trace.increments.push_back(std::move(best_inc));
  }
}

void check_step_indices(const GreedyTrace& trace, std::size_t k,
                        std::size_t j) {
  if (j < 1 || j > k || k > trace.points.size()) {
    throw std::out_of_range("need 1 <= j <= k <= " +
                            std::to_string(trace.points.size()));
  }
}

}  // namespace

std::vector<Rational> GreedyTrace::prefix_perimeters() const {
  std::vector<Rational> out(1);
  for (const auto& inc : increments) out.push_back(out.back() + inc);
  return out;
}

GreedyTrace greedy_permutation(const UltraTriple& t,
                               std::span<const Point> candidates,
                               std::size_t m) {
  const auto cands = normalized(t, candidates);
  if (m > cands.size()) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds |C| = " +
                                std::to_string(cands.size()));
  }
  GreedyTrace trace;
  extend_permutation(t, cands, trace, m);
  return trace;
}

std::vector<GreedyTrace> greedy_permutations(const UltraTriple& t,
                                             std::span<const Point> candidates,
                                             std::size_t m, TieBreak tie_break,
                                             std::size_t cap) {
  if (tie_break == TieBreak::kLowestIndex) {
    return {greedy_permutation(t, candidates, m)};
  }
  std::vector<GreedyTrace> out;
  for (auto& seq : all_greedy_permutations(t, candidates, m, cap)) {
    out.push_back(permutation_trace(t, std::move(seq)));
  }
  return out;
}

bool is_greedy_permutation(const UltraTriple& t,
                           std::span<const Point> candidates,
                           std::span<const Point> seq) {
  const auto cands = normalized(t, candidates);
  std::vector<bool> used(t.size(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Point c = seq[i];
    if (!in_sorted(cands, c) || used[c]) return false;
    const auto prefix = seq.first(i);
    const Rational chosen = set_increment(t, prefix, c);
    for (Point x : cands) {
      if (used[x] || x == c) continue;
      if (set_increment(t, prefix, x) > chosen) return false;
    }
    used[c] = true;
  }
  return true;
}

GreedyTrace extend_greedy(const UltraTriple& t,
                          std::span<const Point> candidates,
                          const GreedyTrace& prefix, std::size_t m) {
  const auto cands = normalized(t, candidates);
  if (prefix.mode != TraceMode::kPermutation ||
      !is_greedy_permutation(t, cands, prefix.points)) {
    throw std::invalid_argument("prefix is not a greedy permutation");
  }
  if (m < prefix.points.size() || m > cands.size()) {
    throw std::invalid_argument("need |prefix| <= m <= |C|");
  }
  GreedyTrace trace = permutation_trace(t, prefix.points);
  extend_permutation(t, cands, trace, m);
  return trace;
}

std::vector<std::vector<Point>> all_greedy_permutations(
    const UltraTriple& t, std::span<const Point> candidates, std::size_t m,
    std::size_t cap) {
  auto cands = normalized(t, candidates);
  if (m > cands.size()) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds |C| = " +
                                std::to_string(cands.size()));
  }
  return PermutationSearch(t, std::move(cands), m, cap).run();
}

Rational nu_bar(const UltraTriple& t, std::span<const Point> candidates,
                std::size_t k) {
  if (k < 1 || k > candidates.size()) {
    throw std::out_of_range("nu_bar needs 1 <= k <= |C|");
  }
  return greedy_permutation(t, candidates, k).increments.back();
}

GreedyTrace greedy_subsequence(const FullUltraTriple& t,
                               std::span<const Point> candidates,
                               std::size_t m) {
  const auto cands = normalized(t.base(), candidates);
  if (cands.empty()) throw std::invalid_argument("C must be nonempty");
  GreedyTrace trace;
  trace.mode = TraceMode::kSubsequence;
  while (trace.points.size() < m) {
    Point best = cands.front();
    Rational best_inc = tuple_increment(t, trace.points, best);
    for (Point x : cands) {
      Rational inc = tuple_increment(t, trace.points, x);
      if (inc > best_inc) {
        best = x;
        best_inc = std::move(inc);
      }
    }
    trace.points.push_back(best);
    trace.increments.push_back(std::move(best_inc));
  }
  return trace;
}

std::vector<GreedyTrace> greedy_subsequences(
    const FullUltraTriple& t, std::span<const Point> candidates, std::size_t m,
    TieBreak tie_break, std::size_t cap) {
  if (tie_break == TieBreak::kLowestIndex) {
    return {greedy_subsequence(t, candidates, m)};
  }
  std::vector<GreedyTrace> out;
  for (auto& seq : all_greedy_subsequences(t, candidates, m, cap)) {
    out.push_back(subsequence_trace(t, std::move(seq)));
  }
  return out;
}

bool is_greedy_subsequence(const FullUltraTriple& t,
                           std::span<const Point> candidates,
                           std::span<const Point> seq) {
  const auto cands = normalized(t.base(), candidates);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Point c = seq[i];
    if (!in_sorted(cands, c)) return false;
    const auto prefix = seq.first(i);
    const Rational chosen = tuple_increment(t, prefix, c);
    for (Point x : cands) {
      if (tuple_increment(t, prefix, x) > chosen) return false;
    }
  }
  return true;
}

std::vector<std::vector<Point>> all_greedy_subsequences(
    const FullUltraTriple& t, std::span<const Point> candidates, std::size_t m,
    std::size_t cap) {
  auto cands = normalized(t.base(), candidates);
  if (cands.empty()) throw std::invalid_argument("C must be nonempty");
  return SubsequenceSearch(t, std::move(cands), m, cap).run();
}

Rational nu(const FullUltraTriple& t, std::span<const Point> candidates,
            std::size_t k) {
  if (k < 1) throw std::out_of_range("nu needs k >= 1");
  return greedy_subsequence(t, candidates, k).increments.back();
}

FullUltraTriple clone_triple(const FullUltraTriple& t, std::size_t copies) {
  if (copies < 1) throw std::invalid_argument("need at least one copy");
  const std::size_t n = t.size() * copies;
  std::vector<std::string> labels;
  std::vector<Rational> weights;
  std::vector<Rational> self;
  labels.reserve(n);
  for (Point e = 0; e < t.size(); ++e) {
    for (std::size_t r = 1; r <= copies; ++r) {
      labels.push_back(t.label(e) + "#" + std::to_string(r));
      weights.push_back(t.weight(e));
      self.push_back(t.distance(e, e));
    }
  }
  auto base = UltraTriple::from_function(
      std::move(labels), std::move(weights), [&](Point i, Point j) {
        return t.distance(i / copies, j / copies);
      });
  return FullUltraTriple(std::move(base), std::move(self));
}

bool nu_bar_inequality_check(const UltraTriple& t,
                             std::span<const Point> candidates,
                             const GreedyTrace& trace, std::size_t k,
                             std::size_t j) {
  check_step_indices(trace, k, j);
  if (trace.mode != TraceMode::kPermutation ||
      !is_greedy_permutation(t, candidates, trace.points)) {
    throw std::invalid_argument("trace is not a greedy permutation");
  }
  const Point cj = trace.points[j - 1];
  Rational rhs = t.weight(cj);
  for (std::size_t i = 1; i <= k; ++i) {
    if (i != j) rhs += t.distance(trace.points[i - 1], cj);
  }
  return nu_bar(t, candidates, k) <= rhs;
}

bool nu_bar_inequality_check(const FullUltraTriple& t,
                             std::span<const Point> candidates,
                             const GreedyTrace& trace, std::size_t k,
                             std::size_t j) {
  if (trace.mode == TraceMode::kPermutation) {
    return nu_bar_inequality_check(t.base(), candidates, trace, k, j);
  }
  check_step_indices(trace, k, j);
  if (!is_greedy_subsequence(t, candidates, trace.points)) {
    throw std::invalid_argument("trace is not a greedy subsequence");
  }
  const Point cj = trace.points[j - 1];
  Rational rhs = t.weight(cj);
  for (std::size_t i = 1; i <= k; ++i) {
    if (i != j) rhs += t.distance(trace.points[i - 1], cj);
  }
  return nu(t, candidates, k) <= rhs;
}

}  // namespace ultra
