#include "ultra/greedoid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ultra/greedy.hpp"

namespace ultra {

namespace {

std::size_t card(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

AxiomReport holds(Axiom axiom) { return {axiom, true, std::nullopt}; }

AxiomReport fails(Axiom axiom, Witness witness) {
  return {axiom, false, std::move(witness)};
}

}  // namespace

SetSystem::SetSystem(std::size_t ground, std::vector<Mask> sets)
    : ground_(ground), sets_(std::move(sets)) {
  if (ground_ > kMaxMaskPoints) {
    throw std::invalid_argument("ground set larger than 64 points");
  }
  const Mask universe =
      ground_ == kMaxMaskPoints ? ~Mask{0} : (Mask{1} << ground_) - 1;
  for (Mask s : sets_) {
    if ((s & ~universe) != 0) {
      throw std::invalid_argument("set has an element outside the ground set");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetSystem::contains(Mask set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set);
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kEmptySet:
      return "i";
    case Axiom::kAccessible:
      return "ii";
    case Axiom::kAugmentation:
      return "iii";
    case Axiom::kStrongExchange:
      return "iv";
    case Axiom::kBasisExchange:
      return "matroid-exchange";
  }
  return "unknown";
}

SetSystem bhargava_greedoid(const UltraTriple& t, std::size_t cap) {
  const std::size_t n = t.size();
  if (n > cap || n >= kMaxMaskPoints) {
    throw CapExceeded("ground set of " + std::to_string(n) +
                      " points exceeds greedoid cap " + std::to_string(cap));
  }
  const Mask subsets = Mask{1} << n;
  std::vector<std::optional<Rational>> best(n + 1);
  std::vector<Rational> per(subsets);
  for (Mask s = 0; s < subsets; ++s) {
    per[s] = perimeter_set(t, s);
    auto& b = best[card(s)];
    if (!b || per[s] > *b) b = per[s];
  }
  std::vector<Mask> feasible;
  for (Mask s = 0; s < subsets; ++s) {
    if (per[s] == *best[card(s)]) feasible.push_back(s);
  }
  return SetSystem(n, std::move(feasible));
}

AxiomReport check_axiom_i(const SetSystem& s) {
  if (s.contains(0)) return holds(Axiom::kEmptySet);
  return fails(Axiom::kEmptySet, {});
}

AxiomReport check_axiom_ii(const SetSystem& s) {
  for (Mask b : s.sets()) {
    if (b == 0) continue;
    bool ok = false;
    for (Point x : points_of(b)) {
      if (s.contains(b & ~bit(x))) {
        ok = true;
        break;
      }
    }
    if (!ok) return fails(Axiom::kAccessible, {{b}, {}});
  }
  return holds(Axiom::kAccessible);
}

AxiomReport check_axiom_iii(const SetSystem& s) {
  for (Mask a : s.sets()) {
    for (Mask b : s.sets()) {
      if (card(b) != card(a) + 1) continue;
      bool ok = false;
      for (Point x : points_of(b & ~a)) {
        if (s.contains(a | bit(x))) {
          ok = true;
          break;
        }
      }
      if (!ok) return fails(Axiom::kAugmentation, {{a, b}, {}});
    }
  }
  return holds(Axiom::kAugmentation);
}

AxiomReport check_axiom_iv(const SetSystem& s) {
  for (Mask a : s.sets()) {
    for (Mask b : s.sets()) {
      if (card(b) != card(a) + 1) continue;
      bool ok = false;
      for (Point x : points_of(b & ~a)) {
        if (s.contains(a | bit(x)) && s.contains(b & ~bit(x))) {
          ok = true;
          break;
        }
      }
      if (!ok) return fails(Axiom::kStrongExchange, {{a, b}, {}});
    }
  }
  return holds(Axiom::kStrongExchange);
}

SetSystem level_sets(const SetSystem& s, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m : s.sets()) {
    if (card(m) == k) out.push_back(m);
  }
  return SetSystem(s.ground(), std::move(out));
}

AxiomReport check_matroid_bases(const SetSystem& s) {
  if (s.size() == 0) return fails(Axiom::kBasisExchange, {});
  const std::size_t k = card(s.sets().front());
  for (Mask m : s.sets()) {
    if (card(m) != k) {
      throw std::invalid_argument("basis family mixes cardinalities");
    }
  }
  for (Mask b1 : s.sets()) {
    for (Mask b2 : s.sets()) {
      for (Point x : points_of(b1 & ~b2)) {
        bool ok = false;
        for (Point y : points_of(b2 & ~b1)) {
          if (s.contains((b1 | bit(y)) & ~bit(x))) {
            ok = true;
            break;
          }
        }
        if (!ok) return fails(Axiom::kBasisExchange, {{b1, b2}, {x}});
      }
    }
  }
  return holds(Axiom::kBasisExchange);
}

Point exchange_element(const UltraTriple& t, Mask a, Mask b) {
  if (card(b) != card(a) + 1) {
    throw std::invalid_argument("exchange_element needs |B| = |A| + 1");
  }
  if (t.size() < kMaxMaskPoints && ((a | b) >> t.size()) != 0) {
    throw std::out_of_range("set has points outside the ground set");
  }
  Mask remaining = b;
  for (Point ai : points_of(a)) {
    const auto rest = points_of(remaining);
    // Lowest-index projection.
    const Point bi = projections(t, rest, ai).front();
    remaining &= ~bit(bi);
  }
  const Point u = static_cast<Point>(std::countr_zero(remaining));
  const Rational lhs =
      perimeter_set(t, b & ~bit(u)) + perimeter_set(t, a | bit(u));
  const Rational rhs = perimeter_set(t, a) + perimeter_set(t, b);
  if (contains(a, u) || lhs < rhs) {
    throw std::logic_error("exchange element violates the perimeter bound; "
                           "is the triple ultrametric?");
  }
  return u;
}

Point strong_exchange_pair(const UltraTriple& t, const SetSystem& s, Mask a,
                           Mask b) {
  if (!s.contains(a) || !s.contains(b)) {
    throw std::invalid_argument("A and B must belong to the system");
  }
  auto works = [&](Point x) {
    return s.contains(a | bit(x)) && s.contains(b & ~bit(x));
  };
  const Point u = exchange_element(t, a, b);
  if (works(u)) return u;
  for (Point x : points_of(b & ~a)) {
    if (works(x)) return x;
  }
  throw std::logic_error("no strong exchange element: system is not strong");
}

}  // namespace ultra
