#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ultra {

/// p-adic valuation value in N ∪ {+inf}. Sums saturate at +inf.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  explicit Valuation(std::int64_t value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  std::int64_t value() const { return *value_; }

  Valuation& operator+=(const Valuation& other) {
    if (is_infinite() || other.is_infinite()) {
      value_.reset();
    } else {
      *value_ += *other.value_;
    }
    return *this;
  }
  friend Valuation operator+(Valuation a, const Valuation& b) { return a += b; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  Valuation() = default;
  std::optional<std::int64_t> value_;
};

/// Largest k with p^k | x, or +inf for x = 0. Throws if p is not prime.
Valuation vp(std::int64_t p, std::int64_t x);

enum class OrderingTieBreak { kLowestValue };

/// A (P,m)-ordering of E for P = pZ: each entry minimizes the valuation of
/// the product of its differences with all earlier entries. Ties go to the
/// smallest integer. When m > |E| the tail repeats elements, since every
/// candidate then has valuation +inf.
std::vector<std::int64_t> pm_ordering(
    const std::vector<std::int64_t>& set, std::int64_t p, std::size_t m,
    OrderingTieBreak tie_break = OrderingTieBreak::kLowestValue);

/// True iff every entry of `seq` lies in E and minimizes the product
/// valuation over all x in E at its step.
bool is_pm_ordering(const std::vector<std::int64_t>& set, std::int64_t p,
                    const std::vector<std::int64_t>& seq);

/// Evaluates `seq` both as a (P,m)-ordering and as a greedy permutation of
/// the -v_p ultra triple with zero weights. Returns the shared verdict;
/// throws std::logic_error if they disagree. `seq` must consist of
/// distinct elements of E.
bool check_equivalence(const std::vector<std::int64_t>& set, std::int64_t p,
                       const std::vector<std::int64_t>& seq);

}  // namespace ultra
