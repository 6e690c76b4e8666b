#pragma once

// Product constructions of 2-partitions.
//
// Given S of order n and T of order m, every product pair has the form
//   {n*r + x, n*t + y}  (mod nm)
// with (x, y) drawn from an orientation of S and (r, t) from an oriented
// list over Z_m. The constructions differ in where the (r, t) come from.

#include <optional>
#include <string_view>
#include <vector>

#include "starter_forge/covers.hpp"
#include "starter_forge/zn.hpp"

namespace starter_forge {

enum class PairType {
  TypeI,       // (r,t) in barT ∪ barT' ∪ {(0,0)}, (x,y) in tildeS
  TypeII,      // (r,t) in barT, x = y = 0
  TypeIStar,   // (x,y) in barS ∪ barS', (r,t) in tildeT; or r = t = 0, (x,y) in barS
  TypeIIStar,  // (r,t) in tildeT, x = y = 0
  TypeIX,      // (r,t) in {(0,0)} ∪ X, (x,y) in tildeS
  TypeIIX,     // (r,t) in tildeT, x = y = 0
};

std::string_view to_string(PairType t) noexcept;

struct Provenance {
  PairType type;
  OrientedPair rt;  // (r, t) over Z_m
  OrientedPair xy;  // (x, y) over Z_n
  UnorderedPair pair;
};

struct ProductResult {
  TwoPartition partition;
  std::int64_t left_order = 0;
  std::int64_t right_order = 0;
  // In construction order.
  std::vector<Provenance> provenance;
};

// W_ST. tildeS orients S, barT must be an ordered cover of T.
// Errors: InvalidCover, OrderMismatch.
ProductResult product(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s,
                      const OrientedList& bar_t);

// Uses orient(s, policy) and build_ordered_cover(t).
ProductResult product(const TwoPartition& s, const TwoPartition& t,
                      OrientationPolicy policy = OrientationPolicy::LoFirst);

// The starred variant: the cover sits on S and the arbitrary orientation on T.
ProductResult product_starred(const TwoPartition& s, const TwoPartition& t, const OrientedList& bar_s,
                              const OrientedList& tilde_t);

// W^X_ST. tildeT only feeds the type (ii_X) pairs; by default orient(t).
// Errors: OrderMismatch.
ProductResult product_with_nucleus(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s,
                                   const Nucleus& x, const std::optional<OrientedList>& tilde_t = std::nullopt);

// W^X_ST with X = cardioidal_nucleus(order of t).
ProductResult cardioidal_product(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s);

// Factors recovered from a partition that is a nucleus product with a left
// factor of the given order.
struct Decomposition {
  TwoPartition left;
  TwoPartition right;
  OrientedList tilde_left;
  Nucleus nucleus;
};

// Attempts to write w as product_with_nucleus(S, T, tildeS, X) with S of order
// left_order. Returns nullopt when no such S, T, tildeS, X exist.
std::optional<Decomposition> decompose_product(const TwoPartition& w, std::int64_t left_order);

}  // namespace starter_forge
