#pragma once

// Residues of Z_n, 2-partitions of Z_n^* and the single-partition predicates
// (starter, strong, skew, Skolem, cardioidal, canonical).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starter_forge/error.hpp"

namespace starter_forge {

// Residues are stored as their representative in [0, n-1]; the modulus lives
// on the owning partition.
using Residue = std::int64_t;

// Least non-negative representative of a mod n, n > 0.
constexpr Residue mod(std::int64_t a, std::int64_t n) noexcept {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr Residue neg_mod(Residue a, std::int64_t n) noexcept { return mod(-a, n); }

// Throws InvalidOrder unless n is odd and >= 3.
void require_valid_order(std::int64_t n);

struct UnorderedPair {
  Residue lo = 0;
  Residue hi = 0;

  static constexpr UnorderedPair of(Residue a, Residue b) noexcept {
    return a < b ? UnorderedPair{a, b} : UnorderedPair{b, a};
  }

  friend constexpr auto operator<=>(const UnorderedPair&, const UnorderedPair&) = default;
};

class TwoPartition {
 public:
  std::int64_t order() const noexcept { return order_; }
  // q = (n-1)/2, the number of pairs.
  std::int64_t half() const noexcept { return (order_ - 1) / 2; }
  // Sorted ascending by lo.
  const std::vector<UnorderedPair>& pairs() const noexcept { return pairs_; }

  bool contains(UnorderedPair p) const noexcept;

  // Partner of a nonzero residue x.
  Residue partner(Residue x) const;

  friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
  friend auto operator<=>(const TwoPartition& a, const TwoPartition& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.pairs_ <=> b.pairs_;
  }

 private:
  friend TwoPartition make_two_partition(std::int64_t, const std::vector<std::pair<std::int64_t, std::int64_t>>&);
  TwoPartition(std::int64_t order, std::vector<UnorderedPair> pairs)
      : order_(order), pairs_(std::move(pairs)) {}

  std::int64_t order_ = 0;
  std::vector<UnorderedPair> pairs_;
};

// Validated constructor. Values are reduced mod order before checking.
// Errors: InvalidOrder, WrongCount, DegeneratePair, ZeroElement, RepeatedElement.
TwoPartition make_two_partition(std::int64_t order,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& raw_pairs);
TwoPartition make_two_partition(std::int64_t order, const std::vector<UnorderedPair>& pairs);

// Pair-level tests of order n.
bool is_skolem_pair(UnorderedPair p, std::int64_t n) noexcept;
bool is_cardioidal_pair(UnorderedPair p, std::int64_t n) noexcept;
bool is_canonical_pair(UnorderedPair p, std::int64_t n) noexcept;

bool is_starter(const TwoPartition& p);
bool is_strong(const TwoPartition& p);
bool is_skew(const TwoPartition& p);
bool is_skolem(const TwoPartition& p);
bool is_cardioidal(const TwoPartition& p);
bool is_canonical(const TwoPartition& p);

// Pair set {{-x,-y}}.
TwoPartition conjugate(const TwoPartition& p);

enum class Predicate { Starter, Strong, Skew, Skolem, Cardioidal, Canonical };

inline constexpr Predicate kAllPredicates[] = {Predicate::Starter, Predicate::Strong,
                                                Predicate::Skew,    Predicate::Skolem,
                                                Predicate::Cardioidal, Predicate::Canonical};

std::string_view to_string(Predicate p) noexcept;
// Throws Parse on an unknown name.
Predicate parse_predicate(std::string_view name);
bool holds(Predicate pred, const TwoPartition& p);

struct Violation {
  Predicate predicate;
  std::vector<UnorderedPair> witnesses;
};

struct PropertyReport {
  std::int64_t order = 0;
  bool is_starter = false;
  bool is_strong = false;
  bool is_skew = false;
  bool is_skolem = false;
  bool is_cardioidal = false;
  bool is_canonical = false;
  // All 2q values ±(x-y) mod n, sorted.
  std::vector<Residue> difference_multiset;
  // The q values (x+y) mod n, sorted.
  std::vector<Residue> sum_multiset;
  // One entry per failed predicate, in kAllPredicates order.
  std::vector<Violation> violations;

  bool get(Predicate p) const noexcept;
};

PropertyReport report(const TwoPartition& p);

}  // namespace starter_forge
