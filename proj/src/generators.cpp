#include "starter_forge/generators.hpp"

#include <algorithm>

namespace starter_forge {

TwoPartition gen_canonical(std::int64_t n) {
  require_valid_order(n);
  std::vector<UnorderedPair> pairs;
  for (Residue i = 1; i <= (n - 1) / 2; ++i) pairs.push_back({i, n - i});
  return make_two_partition(n, pairs);
}

DoublingCycles doubling_cycles(std::int64_t n) {
  require_valid_order(n);
  DoublingCycles out{n, {}};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Residue start = 1; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Residue> cycle;
    for (Residue i = start; !seen[static_cast<std::size_t>(i)]; i = mod(2 * i, n)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::optional<TwoPartition> gen_cardioidal(std::int64_t n, const std::vector<bool>& offsets) {
  const auto dc = doubling_cycles(n);
  std::vector<UnorderedPair> pairs;
  for (std::size_t k = 0; k < dc.cycles.size(); ++k) {
    const auto& c = dc.cycles[k];
    if (c.size() % 2 != 0) return std::nullopt;
    const std::size_t shift = (k < offsets.size() && offsets[k]) ? 1 : 0;
    for (std::size_t i = 0; i < c.size(); i += 2) {
      pairs.push_back(UnorderedPair::of(c[i + shift], c[(i + shift + 1) % c.size()]));
    }
  }
  return make_two_partition(n, pairs);
}

SkolemSequence::SkolemSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 != 0) {
    throw Error(ErrorKind::InvalidSequence, "length must be a positive even number, got " +
                                                std::to_string(entries_.size()));
  }
  const int q = static_cast<int>(entries_.size() / 2);
  std::vector<std::vector<std::size_t>> positions(static_cast<std::size_t>(q) + 1);
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    const int v = entries_[j];
    if (v < 1 || v > q) {
      throw Error(ErrorKind::InvalidSequence, "value " + std::to_string(v) + " outside 1.." + std::to_string(q));
    }
    positions[static_cast<std::size_t>(v)].push_back(j);
  }
  for (int k = 1; k <= q; ++k) {
    const auto& pos = positions[static_cast<std::size_t>(k)];
    if (pos.size() != 2 || pos[1] - pos[0] != static_cast<std::size_t>(k)) {
      throw Error(ErrorKind::InvalidSequence,
                  "value " + std::to_string(k) + " must occur exactly twice, " + std::to_string(k) + " apart");
    }
  }
}

TwoPartition skolem_seq_to_starter(const SkolemSequence& s) {
  const auto& e = s.entries();
  std::vector<std::int64_t> first(static_cast<std::size_t>(s.q()) + 1, 0);
  std::vector<UnorderedPair> pairs;
  for (std::size_t j = 0; j < e.size(); ++j) {
    auto& f = first[static_cast<std::size_t>(e[j])];
    if (f == 0) {
      f = static_cast<std::int64_t>(j + 1);
    } else {
      pairs.push_back({f, static_cast<std::int64_t>(j + 1)});
    }
  }
  return make_two_partition(2 * s.q() + 1, pairs);
}

SkolemSequence starter_to_skolem_seq(const TwoPartition& p) {
  if (!is_starter(p) || !is_skolem(p)) {
    throw Error(ErrorKind::NotSkolemStarter,
                "partition of order " + std::to_string(p.order()) + " is not a Skolem starter");
  }
  std::vector<int> entries(static_cast<std::size_t>(2 * p.half()), 0);
  for (const auto& pr : p.pairs()) {
    const int d = static_cast<int>(pr.hi - pr.lo);
    entries[static_cast<std::size_t>(pr.lo - 1)] = d;
    entries[static_cast<std::size_t>(pr.hi - 1)] = d;
  }
  return SkolemSequence(std::move(entries));
}

Nucleus make_nucleus(const TwoPartition& t, NucleusChoice choice, const std::optional<TwoPartition>& source) {
  switch (choice) {
    case NucleusChoice::FromCover:
      return nucleus_from_cover(build_ordered_cover(t));
    case NucleusChoice::Cardioidal:
      return cardioidal_nucleus(t.order());
    case NucleusChoice::FromStarter:
      if (!source) throw Error(ErrorKind::InvalidNucleus, "from-starter nucleus needs a source partition");
      if (source->order() != t.order()) {
        throw Error(ErrorKind::OrderMismatch, "nucleus source order " + std::to_string(source->order()) +
                                                  " differs from factor order " + std::to_string(t.order()));
      }
      return nucleus_from_cover(build_ordered_cover(*source));
  }
  throw Error(ErrorKind::InvalidNucleus, "unknown nucleus choice");
}

CompositeResult build_composite(const std::vector<CompositeFactor>& factors) {
  if (factors.size() < 2) {
    throw Error(ErrorKind::OrderMismatch, "a composite needs at least two factors");
  }
  std::vector<CompositeStep> steps;
  TwoPartition acc = factors.front().partition;
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const auto& f = factors[k];
    const Nucleus x = make_nucleus(f.partition, f.nucleus, f.nucleus_source);
    auto step = product_with_nucleus(acc, f.partition, orient(acc), x);
    acc = step.partition;
    auto r = report(acc);
    steps.push_back({std::move(step), std::move(r)});
  }
  ProductResult last = steps.back().product;
  return CompositeResult{std::move(last), std::move(steps)};
}

}  // namespace starter_forge
