#pragma once

// Search for 2-partitions of Z_n^* satisfying a set of predicates.
//
// Two strategies are provided. Exhaustive enumeration walks every 2-partition
// (the (n-2)!! of them) and filters; it is the reference oracle and is bounded
// to small orders. Skolem backtracking assigns, for each difference class d
// from q down to 1, a pair {x, x+d} with x+d <= 2q, so it enumerates exactly
// the Skolem starters and reaches much larger orders.
//
// Both strategies split their top-level branch across shards; the merged
// result is independent of the shard count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "starter_forge/zn.hpp"

namespace starter_forge {

inline constexpr std::int64_t kDefaultExhaustiveBound = 13;

// STARTER_FORGE_MAX_EXHAUSTIVE when set to a valid integer, else the default.
std::int64_t exhaustive_bound_from_env();

enum class SearchMode { First, All, Count };
enum class SearchStrategy { Auto, Exhaustive, SkolemBacktrack };

struct Shard {
  std::size_t index = 0;
  std::size_t total = 1;
};

struct SearchSpec {
  std::int64_t order = 3;
  std::vector<Predicate> required;
  SearchMode mode = SearchMode::All;
  std::optional<std::size_t> limit;
  std::optional<Shard> shard;
  SearchStrategy strategy = SearchStrategy::Auto;
  // Keep only the canonically smaller of each {P, conjugate(P)}.
  bool reduce_conjugates = false;
  std::int64_t exhaustive_bound = kDefaultExhaustiveBound;
  // Stop after visiting this many search nodes; the result is then marked
  // incomplete.
  std::optional<std::uint64_t> node_budget;
};

struct SearchResult {
  // Sorted ascending. Empty in count mode.
  std::vector<TwoPartition> partitions;
  std::uint64_t count = 0;
  // False when the node budget ran out before the space was exhausted.
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Throws SearchInfeasible (exhaustive above bound, or backtracking without
// both starter and skolem required) and InvalidOrder.
SearchResult search(const SearchSpec& spec);

// Runs `workers` shards on separate threads and merges them. spec.shard must
// be unset.
SearchResult search_parallel(const SearchSpec& spec, std::size_t workers);

// The strategy Auto resolves to for this spec.
SearchStrategy resolve_strategy(const SearchSpec& spec);

}  // namespace starter_forge
