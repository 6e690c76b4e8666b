#pragma once

// Oriented pair lists, ordered covers and nuclei.
//
// An ordered cover of a 2-partition S of Z_n^* orients every pair so that the
// first coordinates x_i satisfy  {±x_i} = Z_n^*.  A nucleus of order m is a
// list of m-1 ordered pairs over Z_m^* whose first coordinates and whose
// second coordinates are each a permutation of Z_m^*.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "starter_forge/zn.hpp"

namespace starter_forge {

struct OrientedPair {
  Residue first = 0;
  Residue second = 0;

  friend constexpr auto operator<=>(const OrientedPair&, const OrientedPair&) = default;
};

enum class OrientationPolicy { LoFirst, HiFirst };

class OrientedList {
 public:
  // Throws InvalidOrientation if the entries are not exactly the pairs of source.
  OrientedList(TwoPartition source, std::vector<OrientedPair> entries);

  const TwoPartition& source() const noexcept { return source_; }
  std::int64_t order() const noexcept { return source_.order(); }
  const std::vector<OrientedPair>& entries() const noexcept { return entries_; }

  friend bool operator==(const OrientedList&, const OrientedList&) = default;

 private:
  TwoPartition source_;
  std::vector<OrientedPair> entries_;
};

OrientedList orient(const TwoPartition& p, OrientationPolicy policy = OrientationPolicy::LoFirst);

// Entrywise negation mod n. The source of the result is conjugate(source).
OrientedList negate_list(const OrientedList& list);

// True iff {±first_i} is exactly Z_n^*.
bool verify_cover(const OrientedList& list);

class OrderedCover {
 public:
  // Throws InvalidCover when verify_cover fails.
  explicit OrderedCover(OrientedList list);

  const OrientedList& list() const noexcept { return list_; }
  const TwoPartition& source() const noexcept { return list_.source(); }
  std::int64_t order() const noexcept { return list_.order(); }
  const std::vector<OrientedPair>& entries() const noexcept { return list_.entries(); }

 private:
  OrientedList list_;
};

// Chain construction: self-negating pairs {a,-a} go last; every chain starts
// with the pair holding the least unused residue, led by that residue unless
// the pair is {i, 2i}, which is written (i, 2i). Each next pair is oriented so
// that its first coordinate is the negation of the previous second coordinate.
OrderedCover build_ordered_cover(const TwoPartition& p);

class Nucleus {
 public:
  // Throws InvalidOrder / InvalidNucleus.
  Nucleus(std::int64_t order, std::vector<OrientedPair> entries);

  std::int64_t order() const noexcept { return order_; }
  const std::vector<OrientedPair>& entries() const noexcept { return entries_; }

  // Entry order is kept but ignored by comparison.
  friend bool operator==(const Nucleus& a, const Nucleus& b);

 private:
  std::int64_t order_;
  std::vector<OrientedPair> entries_;
};

// C followed by its negation.
Nucleus nucleus_from_cover(const OrderedCover& cover);

// Entries (i, 2i mod m) for i = 1..m-1.
Nucleus cardioidal_nucleus(std::int64_t m);

bool is_subtractive(const Nucleus& x);
bool is_skew_nucleus(const Nucleus& x);
bool is_skolem_nucleus(const Nucleus& x);

// Permutations pi of Z_m with pi(0) = 0 for which i -> pi(i) - i and
// i -> pi(i) + i are permutations too. Each result lists pi(1..m-1).
// limit = 0 means no limit.
std::vector<std::vector<Residue>> strong_permutations(std::int64_t m, std::size_t limit = 0);

// The nucleus {(pi(v), v)} of a strong permutation.
Nucleus nucleus_from_permutation(std::int64_t m, const std::vector<Residue>& images);

inline constexpr std::int64_t kDefaultStrongPermutationBound = 9;

// Cardioidal nucleus when 3 does not divide m; otherwise an exhaustive
// strong-permutation search (SearchInfeasible above exhaustive_bound).
std::optional<Nucleus> find_skew_subtractive_nucleus(
    std::int64_t m, std::int64_t exhaustive_bound = kDefaultStrongPermutationBound);

}  // namespace starter_forge
