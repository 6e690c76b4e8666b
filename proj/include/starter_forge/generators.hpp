#pragma once

// Explicit constructions: canonical and cardioidal partitions, the Skolem
// sequence correspondence and iterated products.

#include <cstdint>
#include <optional>
#include <vector>

#include "starter_forge/covers.hpp"
#include "starter_forge/products.hpp"
#include "starter_forge/zn.hpp"

namespace starter_forge {

// Pairs {i, n-i}.
TwoPartition gen_canonical(std::int64_t n);

struct DoublingCycles {
  std::int64_t order = 0;
  // Each cycle starts at its least element and follows i -> 2i mod n.
  std::vector<std::vector<Residue>> cycles;
};

DoublingCycles doubling_cycles(std::int64_t n);

// Pairs consecutive elements of every doubling cycle. offsets[k] selects the
// matching on cycle k: false pairs (c0,c1),(c2,c3),..., true pairs
// (c1,c2),...,(c_{L-1},c0). Missing entries default to false. Returns nullopt
// when some cycle has odd length.
std::optional<TwoPartition> gen_cardioidal(std::int64_t n, const std::vector<bool>& offsets = {});

class SkolemSequence {
 public:
  // Throws InvalidSequence.
  explicit SkolemSequence(std::vector<int> entries);

  int q() const noexcept { return static_cast<int>(entries_.size() / 2); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const SkolemSequence&, const SkolemSequence&) = default;

 private:
  std::vector<int> entries_;
};

// Positions i < j (1-based) holding value k become the pair {i, j} of Z_{2q+1}.
TwoPartition skolem_seq_to_starter(const SkolemSequence& s);

// Throws NotSkolemStarter unless p is a Skolem starter.
SkolemSequence starter_to_skolem_seq(const TwoPartition& p);

enum class NucleusChoice { FromCover, Cardioidal, FromStarter };

struct CompositeFactor {
  TwoPartition partition;
  NucleusChoice nucleus = NucleusChoice::FromCover;
  // Required for FromStarter: a partition of the same order as `partition`
  // whose ordered cover generates the nucleus.
  std::optional<TwoPartition> nucleus_source;
};

struct CompositeStep {
  ProductResult product;
  PropertyReport report;
};

struct CompositeResult {
  ProductResult product;
  std::vector<CompositeStep> steps;
};

// Left-associated fold: W_1 = factors[0], W_{k+1} = W^X_{W_k, T_k} with
// tildeS = orient(W_k) and X from T_k's nucleus choice. The nucleus choice of
// the first factor is ignored.
CompositeResult build_composite(const std::vector<CompositeFactor>& factors);

Nucleus make_nucleus(const TwoPartition& t, NucleusChoice choice,
                     const std::optional<TwoPartition>& source = std::nullopt);

}  // namespace starter_forge
