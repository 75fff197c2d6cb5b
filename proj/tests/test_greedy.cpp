#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "support.hpp"
#include "ultra/constructions.hpp"
#include "ultra/greedy.hpp"
#include "ultra/oracle.hpp"

using namespace ultra;
using testing::parity5;
using testing::pts;

namespace {

const std::vector<std::int64_t> kWeird{0, 1, 2, 9, 17, 128};

std::vector<Point> as_points(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("greedy") {

TEST_CASE("greedy_permutation") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  CHECK(testing::labels_of(t, greedy_permutation(t, e, 2).points) ==
        std::vector<std::string>{"1", "2"});
  CHECK(greedy_permutation(t, e, 0).points.empty());
  CHECK(greedy_permutation(t, e, 0).prefix_perimeters() ==
        std::vector<Rational>{0});
  CHECK_THROWS_AS(greedy_permutation(t, e, 6), std::invalid_argument);
  CHECK_THROWS_AS(greedy_permutation(t, std::vector<Point>{0, 0}, 1),
                  std::invalid_argument);

  const auto full = greedy_permutation(t, e, 5);
  CHECK(testing::labels_of(t, full.points) ==
        std::vector<std::string>{"1", "2", "3", "4", "5"});
  CHECK(full.increments == std::vector<Rational>{0, 2, 3, 5, 6});
  const auto prefix = full.prefix_perimeters();
  for (std::size_t k = 0; k <= 5; ++k) {
    CHECK(prefix[k] == perimeter_set(t, std::span(full.points).first(k)));
  }
}

TEST_CASE("greedy prefixes attain the reference maxima (p = 2, d)") {
  const auto t = padic_triple(kWeird, 2);
  const auto model = testing::padic_model(kWeird, 2, false);
  const auto trace = greedy_permutation(t, testing::all_points(6), 5);
  const auto prefix = trace.prefix_perimeters();
  for (std::size_t k = 0; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(prefix[k] == testing::ref_max_perimeter(model, k));
  }
}

TEST_CASE("is_greedy_permutation") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  CHECK(is_greedy_permutation(t, pts(t, {"1", "3", "5"}), pts(t, {"1", "3"})));
  CHECK_FALSE(is_greedy_permutation(t, e, pts(t, {"1", "3"})));
  CHECK(is_greedy_permutation(t, e, pts(t, {"1", "2", "3", "4", "5"})));
  CHECK_FALSE(is_greedy_permutation(t, e, pts(t, {"1", "2", "3", "5", "4"})));
  CHECK_FALSE(is_greedy_permutation(t, e, pts(t, {"1", "1"})));
  CHECK_FALSE(is_greedy_permutation(t, pts(t, {"1", "3"}), pts(t, {"2"})));
  CHECK(is_greedy_permutation(t, e, std::vector<Point>{}));

  const auto d = padic_triple(kWeird, 2);
  const auto dl = padic_log_triple(kWeird, 2);
  const auto all = testing::all_points(6);
  // After (2,9), adding 0 beats adding 17 under both metrics, so the
  // orders with 17 third are never greedy; with 0 and 17 swapped the
  // two metrics split as expected.
  const auto a = pts(d, {"2", "9", "17", "0", "1"});
  const auto b = pts(d, {"2", "9", "17", "0", "128"});
  CHECK_FALSE(is_greedy_permutation(dl, all, a));
  CHECK_FALSE(is_greedy_permutation(d, all, a));
  CHECK_FALSE(is_greedy_permutation(d, all, b));
  CHECK_FALSE(is_greedy_permutation(dl, all, b));
  const auto a2 = pts(d, {"2", "9", "0", "17", "1"});
  const auto b2 = pts(d, {"2", "9", "0", "17", "128"});
  CHECK(is_greedy_permutation(dl, all, a2));
  CHECK_FALSE(is_greedy_permutation(d, all, a2));
  CHECK(is_greedy_permutation(d, all, b2));
  CHECK_FALSE(is_greedy_permutation(dl, all, b2));
  const auto third = pts(d, {"2", "9"});
  CHECK(perimeter_set(d, mask_of(third) | testing::mask(d, {"0"})) >
        perimeter_set(d, mask_of(third) | testing::mask(d, {"17"})));
  CHECK(perimeter_set(dl, mask_of(third) | testing::mask(d, {"0"})) >
        perimeter_set(dl, mask_of(third) | testing::mask(d, {"17"})));
}

TEST_CASE("is_greedy_permutation matches the reference definition") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const auto t = oracle::random_ultra_triple(seed, n, 1 + seed % 3);
    const auto ref = testing::ref_greedy(testing::model_of(t), std::min<std::size_t>(n, 3));
    std::set<std::vector<Point>> expected;
    for (const auto& s : ref) expected.insert(as_points(s));
    const auto all = testing::all_points(n);
    const auto got = all_greedy_permutations(t, all, std::min<std::size_t>(n, 3));
    CAPTURE(seed);
    CHECK(std::set<std::vector<Point>>(got.begin(), got.end()) == expected);
    for (const auto& s : got) CHECK(is_greedy_permutation(t, all, s));
  }
}

TEST_CASE("extend_greedy") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  CHECK(extend_greedy(t, e, GreedyTrace{}, 5) == greedy_permutation(t, e, 5));

  const auto prefix = greedy_permutation(t, pts(t, {"1", "2"}), 2);
  const auto ext = extend_greedy(t, e, prefix, 5);
  CHECK(testing::labels_of(t, ext.points) ==
        std::vector<std::string>{"1", "2", "3", "4", "5"});
  CHECK(is_greedy_permutation(t, e, ext.points));

  GreedyTrace bad;
  bad.points = pts(t, {"1", "3"});
  CHECK_THROWS_AS(extend_greedy(t, e, bad, 4), std::invalid_argument);
  CHECK_THROWS_AS(extend_greedy(t, e, prefix, 6), std::invalid_argument);
  CHECK_THROWS_AS(extend_greedy(t, e, prefix, 1), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = oracle::random_ultra_triple(seed, 7, 3);
    const auto all = testing::all_points(7);
    for (const auto& seq : all_greedy_permutations(r, all, 3)) {
      GreedyTrace p;
      p.points = seq;
      const auto full = extend_greedy(r, all, p, 7);
      CHECK(is_greedy_permutation(r, all, full.points));
      for (std::size_t n = 0; n <= 7; ++n) {
        CHECK(is_greedy_permutation(r, all, std::span(full.points).first(n)));
      }
    }
  }
}

TEST_CASE("all_greedy_permutations") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  const auto pairs = all_greedy_permutations(t, e, 2);
  CHECK(pairs.size() == 12);
  for (const auto& p : pairs) {
    CHECK((std::stoi(t.label(p[0])) - std::stoi(t.label(p[1]))) % 2 != 0);
  }
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  CHECK(all_greedy_permutations(t, e, 0) ==
        std::vector<std::vector<Point>>{{}});
  CHECK_THROWS_AS(all_greedy_permutations(t, e, 5, 3), CapExceeded);
  CHECK_THROWS_AS(all_greedy_permutations(t, e, 6), std::invalid_argument);

  const auto traces = greedy_permutations(t, e, 2, TieBreak::kEnumerateAll);
  CHECK(traces.size() == 12);
  CHECK(greedy_permutations(t, e, 2, TieBreak::kLowestIndex).size() == 1);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = oracle::random_ultra_triple(seed, 5, 1 + seed % 4);
    for (std::size_t m = 0; m <= 5; ++m) {
      CHECK(all_greedy_permutations(r, testing::all_points(5), m) ==
            oracle::brute_all_greedy(r, testing::all_points(5), m));
    }
  }
}

TEST_CASE("nu_bar") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  const auto model = testing::parity5_model();
  CHECK(nu_bar(t, e, 1) == 0);
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(nu_bar(t, e, k) == testing::ref_max_perimeter(model, k) -
                                 testing::ref_max_perimeter(model, k - 1));
  }
  CHECK(nu_bar(t, e, 2) == 2);
  CHECK(nu_bar(t, e, 3) == 3);
  CHECK_THROWS_AS(nu_bar(t, e, 0), std::out_of_range);
  CHECK_THROWS_AS(nu_bar(t, e, 6), std::out_of_range);

  const UltraTriple w({"a", "b", "c"}, {Rational(1, 2), 4, -1}, {1, 1, 1});
  CHECK(nu_bar(w, testing::all_points(3), 1) == 4);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const auto r = oracle::random_ultra_triple(seed, n, 3);
    const auto all = testing::all_points(n);
    const auto seqs = all_greedy_permutations(r, all, n);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational nb = nu_bar(r, all, k);
      for (const auto& s : seqs) {
        Rational inc = r.weight(s[k - 1]);
        for (std::size_t i = 0; i + 1 < k; ++i) inc += r.distance(s[i], s[k - 1]);
        CHECK(inc == nb);
      }
    }
  }
}

TEST_CASE("greedy_subsequence") {
  const FullUltraTriple one(UltraTriple({"a"}, {2}, {}), {Rational(1, 2)});
  const auto single = greedy_subsequence(one, std::vector<Point>{0}, 4);
  CHECK(single.points == std::vector<Point>(4, 0));
  CHECK(single.mode == TraceMode::kSubsequence);
  CHECK(greedy_subsequence(one, std::vector<Point>{0}, 0).points.empty());
  CHECK_THROWS_AS(greedy_subsequence(one, std::vector<Point>{}, 1),
                  std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const auto base = oracle::random_ultra_triple(seed, n, 3);
    Rational lo = n > 1 ? base.lower_triangle().front() : Rational(0);
    for (const auto& d : base.lower_triangle()) lo = min(lo, d);
    const auto full = extend_to_full(base, lo - (seed % 2));
    const auto all = testing::all_points(n);
    const std::size_t m = std::min<std::size_t>(6, n <= 3 ? 6 : 5);
    const auto trace = greedy_subsequence(full, all, m);
    CHECK(is_greedy_subsequence(full, all, trace.points));
    const auto prefix = trace.prefix_perimeters();
    for (std::size_t k = 0; k <= m; ++k) {
      CHECK(prefix[k] == oracle::brute_max_tuple_perimeter(full, all, k).value);
    }
  }
}

TEST_CASE("is_greedy_subsequence") {
  const auto full = extend_to_full(
      UltraTriple({"a", "b"}, {1, 3}, {2}), 1);
  const auto all = testing::all_points(2);
  CHECK(is_greedy_subsequence(full, all, std::vector<Point>{}));
  CHECK(is_greedy_subsequence(full, all, std::vector<Point>{1}));
  CHECK_FALSE(is_greedy_subsequence(full, all, std::vector<Point>{0}));
  CHECK_FALSE(is_greedy_subsequence(full, std::vector<Point>{1},
                                    std::vector<Point>{0}));
}

TEST_CASE("nu") {
  const Rational q(5, 2);
  const FullUltraTriple one(UltraTriple({"a"}, {0}, {}), {q});
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(nu(one, std::vector<Point>{0}, k) == Rational(std::int64_t(k) - 1) * q);
  }
  const auto full = extend_to_full(UltraTriple({"a", "b"}, {1, 3}, {2}), 1);
  CHECK(nu(full, testing::all_points(2), 1) == 3);
  CHECK_THROWS_AS(nu(full, testing::all_points(2), 0), std::out_of_range);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const auto base = oracle::random_ultra_triple(seed, n, 3);
    Rational lo = n > 1 ? base.lower_triangle().front() : Rational(0);
    for (const auto& d : base.lower_triangle()) lo = min(lo, d);
    const auto f = extend_to_full(base, lo);
    const auto all = testing::all_points(n);
    const auto seqs = all_greedy_subsequences(f, all, 5);
    CHECK(seqs == oracle::brute_all_greedy_subsequences(f, all, 5));
    for (std::size_t k = 1; k <= 5; ++k) {
      const Rational v = nu(f, all, k);
      for (const auto& s : seqs) {
        Rational inc = f.weight(s[k - 1]);
        for (std::size_t i = 0; i + 1 < k; ++i) inc += f.distance(s[i], s[k - 1]);
        CHECK(inc == v);
      }
    }
  }
}

TEST_CASE("clone_triple") {
  const auto full = extend_to_full(parity5(), 1);
  const auto once = clone_triple(full, 1);
  CHECK(once.size() == 5);
  CHECK(once.label(2) == "3#1");
  CHECK(once.base().lower_triangle() == full.base().lower_triangle());
  CHECK(once.self_distances() == full.self_distances());
  CHECK_THROWS_AS(clone_triple(full, 0), std::invalid_argument);

  const auto three = clone_triple(full, 3);
  CHECK(three.size() == 15);
  CHECK(clone_index(1, 3, 3) == 5);
  CHECK(three.label(5) == "2#3");
  CHECK(validate(three).ok);
  // Tuple perimeter is preserved for any copy choice, set perimeter for
  // distinct copies.
  const auto c = pts(parity5(), {"1", "2", "1", "4"});
  std::vector<Point> lifted{clone_index(c[0], 1, 3), clone_index(c[1], 3, 3),
                            clone_index(c[2], 1, 3), clone_index(c[3], 2, 3)};
  CHECK(perimeter_tuple(three, lifted) == perimeter_tuple(full, c));
  lifted[2] = clone_index(c[2], 2, 3);
  CHECK(perimeter_set(three.base(), lifted) == perimeter_tuple(full, c));
}

TEST_CASE("greedy subsequences of the shifted triple are greedy permutations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const auto base = oracle::random_ultra_triple(seed, n, 3);
    Rational lo = base.lower_triangle().front();
    for (const auto& d : base.lower_triangle()) lo = min(lo, d);
    const auto full = extend_to_full(base, lo);
    // R well above 2 |PER(D)| for every D, with room for the diagonal.
    Rational bound;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      bound = max(bound, perimeter_set(base, m).abs());
    }
    const auto shifted = shift_distances(full, 8 * bound + 8);
    const auto all = testing::all_points(n);
    for (std::size_t m = 0; m <= n; ++m) {
      CHECK(all_greedy_subsequences(shifted, all, m) ==
            all_greedy_permutations(base, all, m));
    }
  }
}

TEST_CASE("nu_bar_inequality_check") {
  const auto t = parity5();
  const auto e = testing::all_points(5);
  const auto trace = greedy_permutation(t, e, 3);
  CHECK(nu_bar_inequality_check(t, e, trace, 3, 1));
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(nu_bar_inequality_check(t, e, trace, k, k));
  }
  CHECK_THROWS_AS(nu_bar_inequality_check(t, e, trace, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(nu_bar_inequality_check(t, e, trace, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(nu_bar_inequality_check(t, e, trace, 2, 0), std::out_of_range);
  GreedyTrace bad;
  bad.points = pts(t, {"1", "3"});
  CHECK_THROWS_AS(nu_bar_inequality_check(t, e, bad, 2, 1),
                  std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto r = oracle::random_ultra_triple(seed, n, 4);
    const auto all = testing::all_points(n);
    for (const auto& tr : greedy_permutations(r, all, n, TieBreak::kEnumerateAll)) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
          CHECK(nu_bar_inequality_check(r, all, tr, k, j));
        }
      }
    }
    Rational lo = n > 1 ? r.lower_triangle().front() : Rational(0);
    for (const auto& d : r.lower_triangle()) lo = min(lo, d);
    const auto f = extend_to_full(r, lo);
    for (const auto& tr : greedy_subsequences(f, all, 4, TieBreak::kEnumerateAll)) {
      for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
          CHECK(nu_bar_inequality_check(f, all, tr, k, j));
        }
      }
    }
  }
}

}
