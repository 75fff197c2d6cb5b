#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultra/core.hpp"

namespace ultra {

/// A collection of subsets of {0, ..., ground-1}, kept sorted and free of
/// duplicates.
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws if some set has an element >= ground or ground > 64.
  SetSystem(std::size_t ground, std::vector<Mask> sets);

  std::size_t ground() const { return ground_; }
  const std::vector<Mask>& sets() const& { return sets_; }
  // Rvalue overload so range-for over a temporary's sets stays valid.
  std::vector<Mask> sets() && { return std::move(sets_); }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask set) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t ground_ = 0;
  std::vector<Mask> sets_;
};

enum class Axiom {
  kEmptySet,        ///< (i)   the empty set is feasible
  kAccessible,      ///< (ii)  every nonempty B has b with B \ b feasible
  kAugmentation,    ///< (iii) |B| = |A|+1 gives b in B \ A with A + b feasible
  kStrongExchange,  ///< (iv)  ... with A + x and B - x both feasible
  kBasisExchange,   ///< matroid basis exchange on one cardinality level
};

std::string to_string(Axiom axiom);

/// Counterexample data. Sets and elements appear in the order the axiom
/// quantifies them: (ii) {B}; (iii), (iv) {A, B}; basis exchange
/// {B1, B2} with element x. For (i) and an empty basis family both lists
/// are empty.
struct Witness {
  std::vector<Mask> sets;
  std::vector<Point> elements;
};

struct AxiomReport {
  Axiom axiom = Axiom::kEmptySet;
  bool holds = true;
  std::optional<Witness> witness;
};

/// Every subset of E whose perimeter is maximal among subsets of its size.
/// Throws CapExceeded when |E| > cap.
SetSystem bhargava_greedoid(const UltraTriple& triple, std::size_t cap = 16);

AxiomReport check_axiom_i(const SetSystem& system);
AxiomReport check_axiom_ii(const SetSystem& system);
AxiomReport check_axiom_iii(const SetSystem& system);
AxiomReport check_axiom_iv(const SetSystem& system);

/// Members of cardinality exactly k.
SetSystem level_sets(const SetSystem& system, std::size_t k);

/// Holds iff the family is nonempty and satisfies basis exchange. Throws
/// std::invalid_argument if members have different sizes.
AxiomReport check_matroid_bases(const SetSystem& system);

/// For |B| = |A| + 1, returns u in B \ A with
/// PER(B \ u) + PER(A + u) >= PER(A) + PER(B), built by projecting the
/// elements of A (in index order) onto the shrinking remainder of B. Throws
/// std::invalid_argument on a size mismatch and std::logic_error if the
/// inequality fails, which cannot happen for a valid triple.
Point exchange_element(const UltraTriple& triple, Mask a, Mask b);

/// For members A, B of a Bhargava greedoid with |B| = |A| + 1, returns x in
/// B \ A with A + x and B - x both in the system. Tries exchange_element
/// first, then the rest of B \ A in index order. Throws std::logic_error
/// when no such x exists.
Point strong_exchange_pair(const UltraTriple& triple, const SetSystem& system,
                           Mask a, Mask b);

}  // namespace ultra
