#include "starter_forge/covers.hpp"

#include <algorithm>

namespace starter_forge {

OrientedList::OrientedList(TwoPartition source, std::vector<OrientedPair> entries)
    : source_(std::move(source)), entries_(std::move(entries)) {
  std::vector<UnorderedPair> forgotten;
  forgotten.reserve(entries_.size());
  for (const auto& e : entries_) forgotten.push_back(UnorderedPair::of(e.first, e.second));
  std::sort(forgotten.begin(), forgotten.end());
  if (forgotten != source_.pairs()) {
    throw Error(ErrorKind::InvalidOrientation,
                "entries do not orient the pairs of the source partition of order " +
                    std::to_string(source_.order()));
  }
}

OrientedList orient(const TwoPartition& p, OrientationPolicy policy) {
  std::vector<OrientedPair> entries;
  entries.reserve(p.pairs().size());
  for (const auto& pr : p.pairs()) {
    if (policy == OrientationPolicy::LoFirst) {
      entries.push_back({pr.lo, pr.hi});
    } else {
      entries.push_back({pr.hi, pr.lo});
    }
  }
  return OrientedList(p, std::move(entries));
}

OrientedList negate_list(const OrientedList& list) {
  const auto n = list.order();
  std::vector<OrientedPair> entries;
  entries.reserve(list.entries().size());
  for (const auto& e : list.entries()) entries.push_back({neg_mod(e.first, n), neg_mod(e.second, n)});
  return OrientedList(conjugate(list.source()), std::move(entries));
}

bool verify_cover(const OrientedList& list) {
  const auto n = list.order();
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& e : list.entries()) {
    ++hits[static_cast<std::size_t>(e.first)];
    ++hits[static_cast<std::size_t>(neg_mod(e.first, n))];
  }
  return std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
}

OrderedCover::OrderedCover(OrientedList list) : list_(std::move(list)) {
  if (!verify_cover(list_)) {
    throw Error(ErrorKind::InvalidCover,
                "first coordinates and their negatives do not cover Z_" + std::to_string(list_.order()) + "^*");
  }
}

OrderedCover build_ordered_cover(const TwoPartition& p) {
  const auto n = p.order();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<OrientedPair> chains;
  std::vector<OrientedPair> self_negating;
  std::vector<Residue> partner(static_cast<std::size_t>(n), 0);

  for (const auto& pr : p.pairs()) {
    partner[static_cast<std::size_t>(pr.lo)] = pr.hi;
    partner[static_cast<std::size_t>(pr.hi)] = pr.lo;
    if (is_canonical_pair(pr, n)) {
      self_negating.push_back({pr.lo, pr.hi});
      used[static_cast<std::size_t>(pr.lo)] = used[static_cast<std::size_t>(pr.hi)] = true;
    }
  }

  for (Residue start = 1; start < n; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    // A cardioidal start pair is oriented (i, 2i).
    const Residue other = partner[static_cast<std::size_t>(start)];
    const Residue head = mod(2 * other, n) == start ? other : start;
    // The chain closes once a second coordinate equals -head.
    Residue first = head;
    while (true) {
      const Residue second = partner[static_cast<std::size_t>(first)];
      used[static_cast<std::size_t>(first)] = used[static_cast<std::size_t>(second)] = true;
      chains.push_back({first, second});
      const Residue next = neg_mod(second, n);
      if (next == head) break;
      first = next;
    }
  }

  chains.insert(chains.end(), self_negating.begin(), self_negating.end());
  return OrderedCover(OrientedList(p, std::move(chains)));
}

Nucleus::Nucleus(std::int64_t order, std::vector<OrientedPair> entries)
    : order_(order), entries_(std::move(entries)) {
  require_valid_order(order_);
  if (entries_.size() != static_cast<std::size_t>(order_ - 1)) {
    throw Error(ErrorKind::InvalidNucleus, "a nucleus of order " + std::to_string(order_) + " needs " +
                                               std::to_string(order_ - 1) + " entries, got " +
                                               std::to_string(entries_.size()));
  }
  std::vector<bool> firsts(static_cast<std::size_t>(order_), false);
  std::vector<bool> seconds(static_cast<std::size_t>(order_), false);
  for (const auto& e : entries_) {
    for (auto [v, seen] : {std::pair{e.first, &firsts}, std::pair{e.second, &seconds}}) {
      if (v <= 0 || v >= order_ || (*seen)[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::InvalidNucleus,
                    "coordinates are not a permutation of Z_" + std::to_string(order_) + "^*");
      }
      (*seen)[static_cast<std::size_t>(v)] = true;
    }
  }
}

bool operator==(const Nucleus& a, const Nucleus& b) {
  if (a.order_ != b.order_) return false;
  auto x = a.entries_;
  auto y = b.entries_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Nucleus nucleus_from_cover(const OrderedCover& cover) {
  auto entries = cover.entries();
  const auto negated = negate_list(cover.list()).entries();
  entries.insert(entries.end(), negated.begin(), negated.end());
  return Nucleus(cover.order(), std::move(entries));
}

Nucleus cardioidal_nucleus(std::int64_t m) {
  require_valid_order(m);
  std::vector<OrientedPair> entries;
  entries.reserve(static_cast<std::size_t>(m - 1));
  for (Residue i = 1; i < m; ++i) entries.push_back({i, mod(2 * i, m)});
  return Nucleus(m, std::move(entries));
}

namespace {

template <typename Combine>
bool combination_covers(const Nucleus& x, Combine combine) {
  const auto m = x.order();
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (const auto& e : x.entries()) {
    const Residue v = mod(combine(e.first, e.second), m);
    if (v == 0 || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

struct StrongPermutationSearch {
  std::int64_t m;
  std::size_t limit;
  std::vector<Residue> images;  // images[i] = pi(i); images[0] = 0
  std::vector<bool> used_image, used_diff, used_sum;
  std::vector<std::vector<Residue>> found;

  explicit StrongPermutationSearch(std::int64_t m_, std::size_t limit_)
      : m(m_),
        limit(limit_),
        images(static_cast<std::size_t>(m_), 0),
        used_image(static_cast<std::size_t>(m_), false),
        used_diff(static_cast<std::size_t>(m_), false),
        used_sum(static_cast<std::size_t>(m_), false) {
    used_image[0] = used_diff[0] = used_sum[0] = true;
  }

  bool done() const { return limit != 0 && found.size() >= limit; }

  void run(Residue i) {
    if (done()) return;
    if (i == m) {
      found.emplace_back(images.begin() + 1, images.end());
      return;
    }
    for (Residue v = 1; v < m && !done(); ++v) {
      const auto d = static_cast<std::size_t>(mod(v - i, m));
      const auto s = static_cast<std::size_t>(mod(v + i, m));
      if (used_image[static_cast<std::size_t>(v)] || used_diff[d] || used_sum[s]) continue;
      used_image[static_cast<std::size_t>(v)] = used_diff[d] = used_sum[s] = true;
      images[static_cast<std::size_t>(i)] = v;
      run(i + 1);
      used_image[static_cast<std::size_t>(v)] = used_diff[d] = used_sum[s] = false;
    }
  }
};

}  // namespace

bool is_subtractive(const Nucleus& x) {
  return combination_covers(x, [](Residue u, Residue v) { return u - v; });
}

bool is_skew_nucleus(const Nucleus& x) {
  return combination_covers(x, [](Residue u, Residue v) { return u + v; });
}

bool is_skolem_nucleus(const Nucleus& x) {
  return std::all_of(x.entries().begin(), x.entries().end(), [m = x.order()](const OrientedPair& e) {
    return is_skolem_pair(UnorderedPair::of(e.first, e.second), m);
  });
}

std::vector<std::vector<Residue>> strong_permutations(std::int64_t m, std::size_t limit) {
  require_valid_order(m);
  StrongPermutationSearch search(m, limit);
  search.run(1);
  return std::move(search.found);
}

Nucleus nucleus_from_permutation(std::int64_t m, const std::vector<Residue>& images) {
  std::vector<OrientedPair> entries;
  entries.reserve(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    entries.push_back({images[k], static_cast<Residue>(k + 1)});
  }
  return Nucleus(m, std::move(entries));
}

std::optional<Nucleus> find_skew_subtractive_nucleus(std::int64_t m, std::int64_t exhaustive_bound) {
  require_valid_order(m);
  if (m % 3 != 0) return cardioidal_nucleus(m);
  if (m > exhaustive_bound) {
    throw Error(ErrorKind::SearchInfeasible, "strong permutation search for m = " + std::to_string(m) +
                                                 " exceeds the exhaustive bound " +
                                                 std::to_string(exhaustive_bound));
  }
  auto perms = strong_permutations(m, 1);
  if (perms.empty()) return std::nullopt;
  return nucleus_from_permutation(m, perms.front());
}

}  // namespace starter_forge
