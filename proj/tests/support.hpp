#pragma once

// Helpers shared by the unit and acceptance tests, plus a small reference
// implementation that works from closed-form weight and distance functions
// instead of UltraTriple, so derived values do not depend on library code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ultra/constructions.hpp"
#include "ultra/core.hpp"
#include "ultra/rational.hpp"

namespace testing {

using ultra::Mask;
using ultra::Point;
using ultra::Rational;
using ultra::UltraTriple;

/// E = {1,...,5}, w = 0, d = 1 on equal parity and 2 otherwise.
inline UltraTriple parity5() {
  return ultra::mod_triple({1, 2, 3, 4, 5}, 2, 1, 2);
}

/// Indices of the given labels; fails loudly on an unknown label.
inline std::vector<Point> pts(const UltraTriple& t,
                              std::initializer_list<std::string> labels) {
  std::vector<Point> out;
  for (const auto& l : labels) {
    const auto p = t.find(l);
    if (!p) throw std::invalid_argument("no label " + l);
    out.push_back(*p);
  }
  return out;
}

inline Mask mask(const UltraTriple& t,
                 std::initializer_list<std::string> labels) {
  return ultra::mask_of(pts(t, labels));
}

inline std::vector<Point> all_points(std::size_t n) {
  std::vector<Point> out(n);
  for (Point i = 0; i < n; ++i) out[i] = i;
  return out;
}

inline std::vector<std::string> labels_of(const UltraTriple& t,
                                          const std::vector<Point>& seq) {
  std::vector<std::string> out;
  for (Point p : seq) out.push_back(t.label(p));
  return out;
}

inline std::size_t card(Mask m) {
  return static_cast<std::size_t>(std::popcount(m));
}

// Reference model ----------------------------------------------------------

/// A triple given by functions on point indices.
struct Model {
  std::size_t n = 0;
  std::function<Rational(std::size_t)> w;
  std::function<Rational(std::size_t, std::size_t)> d;
};

inline Rational ref_perimeter(const Model& m, const std::vector<std::size_t>& s) {
  Rational total;
  for (std::size_t i = 0; i < s.size(); ++i) {
    total += m.w(s[i]);
    for (std::size_t j = 0; j < i; ++j) total += m.d(s[i], s[j]);
  }
  return total;
}

inline std::vector<std::size_t> members(Mask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

/// Maximum perimeter over k-subsets of {0..n-1}.
inline Rational ref_max_perimeter(const Model& m, std::size_t k) {
  bool seen = false;
  Rational best;
  for (Mask s = 0; s < (Mask{1} << m.n); ++s) {
    if (card(s) != k) continue;
    const Rational per = ref_perimeter(m, members(s));
    if (!seen || per > best) best = per;
    seen = true;
  }
  return best;
}

/// Every greedy m-permutation of {0..n-1}, straight from the definition.
inline std::vector<std::vector<std::size_t>> ref_greedy(const Model& m,
                                                        std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> seq(len);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      out.push_back(seq);
      return;
    }
    for (std::size_t c = 0; c < m.n; ++c) {
      if (std::find(seq.begin(), seq.begin() + i, c) != seq.begin() + i) {
        continue;
      }
      std::vector<std::size_t> prefix(seq.begin(), seq.begin() + i);
      prefix.push_back(c);
      const Rational chosen = ref_perimeter(m, prefix);
      bool ok = true;
      for (std::size_t x = 0; x < m.n && ok; ++x) {
        if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) {
          continue;
        }
        prefix.back() = x;
        ok = !(ref_perimeter(m, prefix) > chosen);
        prefix.back() = c;
      }
      if (!ok) continue;
      seq[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// parity5 by formula: labels 1..5 sit at indices 0..4.
inline Model parity5_model() {
  return Model{5, [](std::size_t) { return Rational(0); },
               [](std::size_t i, std::size_t j) {
                 return Rational(i % 2 == j % 2 ? 1 : 2);
               }};
}

/// Largest k with p^k | x, or -1 for x = 0.
inline int ref_vp(std::int64_t p, std::int64_t x) {
  if (x == 0) return -1;
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

inline Model padic_model(const std::vector<std::int64_t>& e, std::int64_t p,
                         bool log_form) {
  return Model{e.size(), [](std::size_t) { return Rational(0); },
               [e, p, log_form](std::size_t i, std::size_t j) {
                 const int v = ref_vp(p, e[i] - e[j]);
                 return log_form ? Rational(-v) : Rational(p).pow(-v);
               }};
}

inline Model model_of(const UltraTriple& t) {
  std::vector<Rational> w = t.weights();
  std::vector<std::vector<Rational>> d(t.size(),
                                       std::vector<Rational>(t.size()));
  for (Point i = 0; i < t.size(); ++i) {
    for (Point j = 0; j < t.size(); ++j) {
      if (i != j) d[i][j] = t.distance(i, j);
    }
  }
  return Model{t.size(), [w](std::size_t i) { return w[i]; },
               [d](std::size_t i, std::size_t j) { return d[i][j]; }};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Deterministic engine for property sweeps.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
  return g() % n;
}

}  // namespace testing
