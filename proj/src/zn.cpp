#include "starter_forge/zn.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace starter_forge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::RepeatedElement: return "RepeatedElement";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::WrongCount: return "WrongCount";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::InvalidOrientation: return "InvalidOrientation";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::InvalidNucleus: return "InvalidNucleus";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::SearchInfeasible: return "SearchInfeasible";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::NotSkolemStarter: return "NotSkolemStarter";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

void require_valid_order(std::int64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorKind::InvalidOrder, "order must be odd and >= 3, got " + std::to_string(n));
  }
}

namespace {

std::string pair_text(std::int64_t a, std::int64_t b) {
  std::ostringstream os;
  os << '{' << a << ',' << b << '}';
  return os.str();
}

// Canonical difference class of a pair: min(d, n-d) with d = hi - lo.
Residue difference_class(UnorderedPair p, std::int64_t n) noexcept {
  const Residue d = p.hi - p.lo;
  return std::min(d, n - d);
}

Residue pair_sum(UnorderedPair p, std::int64_t n) noexcept { return mod(p.lo + p.hi, n); }

using Witness = std::optional<std::vector<UnorderedPair>>;

Witness starter_witness(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<std::optional<UnorderedPair>> seen(static_cast<std::size_t>(n));
  for (const auto& pr : p.pairs()) {
    auto& slot = seen[static_cast<std::size_t>(difference_class(pr, n))];
    if (slot) return std::vector{*slot, pr};
    slot = pr;
  }
  return std::nullopt;
}

Witness strong_witness(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<std::optional<UnorderedPair>> seen(static_cast<std::size_t>(n));
  for (const auto& pr : p.pairs()) {
    const Residue s = pair_sum(pr, n);
    if (s == 0) return std::vector{pr};
    auto& slot = seen[static_cast<std::size_t>(s)];
    if (slot) return std::vector{*slot, pr};
    slot = pr;
  }
  return std::nullopt;
}

Witness skew_witness(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<std::optional<UnorderedPair>> seen(static_cast<std::size_t>(n));
  for (const auto& pr : p.pairs()) {
    const Residue s = pair_sum(pr, n);
    if (s == 0) return std::vector{pr};
    auto& slot = seen[static_cast<std::size_t>(std::min(s, n - s))];
    if (slot) return std::vector{*slot, pr};
    slot = pr;
  }
  return std::nullopt;
}

template <typename PairTest>
Witness first_failing_pair(const TwoPartition& p, PairTest test) {
  for (const auto& pr : p.pairs()) {
    if (!test(pr, p.order())) return std::vector{pr};
  }
  return std::nullopt;
}

Witness witness_for(Predicate pred, const TwoPartition& p) {
  switch (pred) {
    case Predicate::Starter: return starter_witness(p);
    case Predicate::Strong: return strong_witness(p);
    case Predicate::Skew: return skew_witness(p);
    case Predicate::Skolem: return first_failing_pair(p, is_skolem_pair);
    case Predicate::Cardioidal: return first_failing_pair(p, is_cardioidal_pair);
    case Predicate::Canonical: return first_failing_pair(p, is_canonical_pair);
  }
  return std::nullopt;
}

}  // namespace

bool TwoPartition::contains(UnorderedPair p) const noexcept {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

Residue TwoPartition::partner(Residue x) const {
  for (const auto& p : pairs_) {
    if (p.lo == x) return p.hi;
    if (p.hi == x) return p.lo;
  }
  throw Error(ErrorKind::ZeroElement, std::to_string(x) + " is not an element of Z_" +
                                          std::to_string(order_) + "^*");
}

TwoPartition make_two_partition(std::int64_t order,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& raw_pairs) {
  require_valid_order(order);
  const auto q = static_cast<std::size_t>((order - 1) / 2);
  if (raw_pairs.size() != q) {
    throw Error(ErrorKind::WrongCount, "expected " + std::to_string(q) + " pairs for order " +
                                           std::to_string(order) + ", got " +
                                           std::to_string(raw_pairs.size()));
  }
  std::vector<bool> used(static_cast<std::size_t>(order), false);
  std::vector<UnorderedPair> pairs;
  pairs.reserve(q);
  for (const auto& [a, b] : raw_pairs) {
    const Residue x = mod(a, order);
    const Residue y = mod(b, order);
    if (x == y) throw Error(ErrorKind::DegeneratePair, pair_text(a, b));
    if (x == 0 || y == 0) throw Error(ErrorKind::ZeroElement, pair_text(a, b));
    for (Residue e : {x, y}) {
      if (used[static_cast<std::size_t>(e)]) {
        throw Error(ErrorKind::RepeatedElement,
                    std::to_string(e) + " appears more than once (at " + pair_text(a, b) + ")");
      }
      used[static_cast<std::size_t>(e)] = true;
    }
    pairs.push_back(UnorderedPair::of(x, y));
  }
  std::sort(pairs.begin(), pairs.end());
  return TwoPartition(order, std::move(pairs));
}

TwoPartition make_two_partition(std::int64_t order, const std::vector<UnorderedPair>& pairs) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  raw.reserve(pairs.size());
  for (const auto& p : pairs) raw.emplace_back(p.lo, p.hi);
  return make_two_partition(order, raw);
}

bool is_skolem_pair(UnorderedPair p, std::int64_t n) noexcept { return p.hi - p.lo <= (n - 1) / 2; }

bool is_cardioidal_pair(UnorderedPair p, std::int64_t n) noexcept {
  return mod(2 * p.lo, n) == p.hi || mod(2 * p.hi, n) == p.lo;
}

bool is_canonical_pair(UnorderedPair p, std::int64_t n) noexcept { return p.lo + p.hi == n; }

bool is_starter(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& pr : p.pairs()) {
    hit[static_cast<std::size_t>(mod(pr.lo - pr.hi, n))] = true;
    hit[static_cast<std::size_t>(mod(pr.hi - pr.lo, n))] = true;
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

bool is_strong(const TwoPartition& p) { return !strong_witness(p); }

bool is_skew(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& pr : p.pairs()) {
    const Residue s = pair_sum(pr, n);
    hit[static_cast<std::size_t>(s)] = true;
    hit[static_cast<std::size_t>(neg_mod(s, n))] = true;
  }
  return !hit[0] && std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

bool is_skolem(const TwoPartition& p) {
  return std::all_of(p.pairs().begin(), p.pairs().end(),
                     [n = p.order()](UnorderedPair pr) { return is_skolem_pair(pr, n); });
}

bool is_cardioidal(const TwoPartition& p) {
  return std::all_of(p.pairs().begin(), p.pairs().end(),
                     [n = p.order()](UnorderedPair pr) { return is_cardioidal_pair(pr, n); });
}

bool is_canonical(const TwoPartition& p) {
  return std::all_of(p.pairs().begin(), p.pairs().end(),
                     [n = p.order()](UnorderedPair pr) { return is_canonical_pair(pr, n); });
}

TwoPartition conjugate(const TwoPartition& p) {
  std::vector<UnorderedPair> out;
  out.reserve(p.pairs().size());
  for (const auto& pr : p.pairs()) out.push_back(UnorderedPair::of(neg_mod(pr.lo, p.order()), neg_mod(pr.hi, p.order())));
  return make_two_partition(p.order(), out);
}

std::string_view to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::Starter: return "starter";
    case Predicate::Strong: return "strong";
    case Predicate::Skew: return "skew";
    case Predicate::Skolem: return "skolem";
    case Predicate::Cardioidal: return "cardioidal";
    case Predicate::Canonical: return "canonical";
  }
  return "unknown";
}

Predicate parse_predicate(std::string_view name) {
  for (Predicate p : kAllPredicates) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorKind::Parse, "unknown predicate '" + std::string(name) + "'");
}

bool holds(Predicate pred, const TwoPartition& p) {
  switch (pred) {
    case Predicate::Starter: return is_starter(p);
    case Predicate::Strong: return is_strong(p);
    case Predicate::Skew: return is_skew(p);
    case Predicate::Skolem: return is_skolem(p);
    case Predicate::Cardioidal: return is_cardioidal(p);
    case Predicate::Canonical: return is_canonical(p);
  }
  return false;
}

bool PropertyReport::get(Predicate p) const noexcept {
  switch (p) {
    case Predicate::Starter: return is_starter;
    case Predicate::Strong: return is_strong;
    case Predicate::Skew: return is_skew;
    case Predicate::Skolem: return is_skolem;
    case Predicate::Cardioidal: return is_cardioidal;
    case Predicate::Canonical: return is_canonical;
  }
  return false;
}

PropertyReport report(const TwoPartition& p) {
  PropertyReport r;
  r.order = p.order();
  r.is_starter = is_starter(p);
  r.is_strong = is_strong(p);
  r.is_skew = is_skew(p);
  r.is_skolem = is_skolem(p);
  r.is_cardioidal = is_cardioidal(p);
  r.is_canonical = is_canonical(p);

  const auto n = p.order();
  for (const auto& pr : p.pairs()) {
    r.difference_multiset.push_back(mod(pr.lo - pr.hi, n));
    r.difference_multiset.push_back(mod(pr.hi - pr.lo, n));
    r.sum_multiset.push_back(pair_sum(pr, n));
  }
  std::sort(r.difference_multiset.begin(), r.difference_multiset.end());
  std::sort(r.sum_multiset.begin(), r.sum_multiset.end());

  for (Predicate pred : kAllPredicates) {
    if (r.get(pred)) continue;
    auto w = witness_for(pred, p);
    r.violations.push_back({pred, w ? std::move(*w) : std::vector<UnorderedPair>{}});
  }
  return r;
}

}  // namespace starter_forge
