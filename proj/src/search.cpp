#include "starter_forge/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace starter_forge {

std::int64_t exhaustive_bound_from_env() {
  const char* raw = std::getenv("STARTER_FORGE_MAX_EXHAUSTIVE");
  if (raw == nullptr) return kDefaultExhaustiveBound;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 3) return kDefaultExhaustiveBound;
  return v;
}

namespace {

bool requires_predicate(const SearchSpec& spec, Predicate p) {
  return std::find(spec.required.begin(), spec.required.end(), p) != spec.required.end();
}

struct Hit {
  std::size_t branch;
  std::uint64_t seq;
  TwoPartition partition;
};

std::uint64_t result_cap(const SearchSpec& spec) {
  if (spec.mode == SearchMode::First) return 1;
  return spec.limit ? *spec.limit : std::numeric_limits<std::uint64_t>::max();
}

// Accumulates the hits of one shard in traversal order.
class Collector {
 public:
  explicit Collector(const SearchSpec& spec) : spec_(spec), cap_(result_cap(spec)) {}

  bool stopped() const noexcept { return stopped_; }

  bool owns_branch(std::size_t branch) const noexcept {
    if (!spec_.shard) return true;
    return branch % spec_.shard->total == spec_.shard->index;
  }

  void enter_branch(std::size_t branch) noexcept {
    branch_ = branch;
    seq_ = 0;
  }

  // Counts one node; returns false once the budget is spent.
  bool tick() noexcept {
    if (spec_.node_budget && nodes_ >= *spec_.node_budget) {
      stopped_ = true;
      complete_ = false;
      return false;
    }
    ++nodes_;
    return !stopped_;
  }

  void offer(const TwoPartition& p) {
    for (Predicate pred : spec_.required) {
      if (!holds(pred, p)) return;
    }
    if (spec_.reduce_conjugates && conjugate(p) < p) return;
    ++count_;
    if (spec_.mode != SearchMode::Count) hits_.push_back({branch_, seq_, p});
    ++seq_;
    if (count_ >= cap_) stopped_ = true;
  }

  std::vector<Hit> hits_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool complete_ = true;

 private:
  const SearchSpec& spec_;
  std::uint64_t cap_;
  bool stopped_ = false;
  std::size_t branch_ = 0;
  std::uint64_t seq_ = 0;
};

// Pairs the least free element with every larger free element.
class ExhaustiveWalk {
 public:
  ExhaustiveWalk(std::int64_t n, Collector& out)
      : n_(n), out_(out), free_(static_cast<std::size_t>(n), true) {
    free_[0] = false;
  }

  void run(bool top) {
    if (out_.stopped() || !out_.tick()) return;
    Residue a = 1;
    while (a < n_ && !free_[static_cast<std::size_t>(a)]) ++a;
    if (a == n_) {
      out_.offer(make_two_partition(n_, pairs_));
      return;
    }
    free_[static_cast<std::size_t>(a)] = false;
    std::size_t branch = 0;
    for (Residue b = a + 1; b < n_ && !out_.stopped(); ++b) {
      if (!free_[static_cast<std::size_t>(b)]) continue;
      if (top) {
        const std::size_t this_branch = branch++;
        if (!out_.owns_branch(this_branch)) continue;
        out_.enter_branch(this_branch);
      }
      free_[static_cast<std::size_t>(b)] = false;
      pairs_.push_back({a, b});
      run(false);
      pairs_.pop_back();
      free_[static_cast<std::size_t>(b)] = true;
    }
    free_[static_cast<std::size_t>(a)] = true;
  }

 private:
  std::int64_t n_;
  Collector& out_;
  std::vector<bool> free_;
  std::vector<UnorderedPair> pairs_;
};

// Places the difference classes d = q, q-1, ..., 1 as pairs {x, x+d}.
class SkolemBacktrack {
 public:
  SkolemBacktrack(const SearchSpec& spec, Collector& out)
      : n_(spec.order),
        q_((spec.order - 1) / 2),
        out_(out),
        strong_(requires_predicate(spec, Predicate::Strong)),
        skew_(requires_predicate(spec, Predicate::Skew)),
        cardioidal_(requires_predicate(spec, Predicate::Cardioidal)),
        canonical_(requires_predicate(spec, Predicate::Canonical)),
        free_(static_cast<std::size_t>(spec.order), true),
        sum_used_(static_cast<std::size_t>(spec.order), false) {}

  void run(std::int64_t d) {
    if (out_.stopped() || !out_.tick()) return;
    if (d == 0) {
      out_.offer(make_two_partition(n_, pairs_));
      return;
    }
    const bool top = d == q_;
    for (Residue x = 1; x + d <= 2 * q_ && !out_.stopped(); ++x) {
      if (top) {
        const auto branch = static_cast<std::size_t>(x - 1);
        if (!out_.owns_branch(branch)) continue;
        out_.enter_branch(branch);
      }
      const Residue y = x + d;
      if (!free_[static_cast<std::size_t>(x)] || !free_[static_cast<std::size_t>(y)]) continue;
      const UnorderedPair p{x, y};
      if (cardioidal_ && !is_cardioidal_pair(p, n_)) continue;
      if (canonical_ && !is_canonical_pair(p, n_)) continue;
      std::size_t sum_slot = 0;
      if (strong_ || skew_) {
        const Residue s = mod(x + y, n_);
        if (s == 0) continue;
        sum_slot = static_cast<std::size_t>(skew_ ? std::min(s, n_ - s) : s);
        if (sum_used_[sum_slot]) continue;
        sum_used_[sum_slot] = true;
      }
      free_[static_cast<std::size_t>(x)] = free_[static_cast<std::size_t>(y)] = false;
      pairs_.push_back(p);
      run(d - 1);
      pairs_.pop_back();
      free_[static_cast<std::size_t>(x)] = free_[static_cast<std::size_t>(y)] = true;
      if (strong_ || skew_) sum_used_[sum_slot] = false;
    }
  }

 private:
  std::int64_t n_;
  std::int64_t q_;
  Collector& out_;
  bool strong_, skew_, cardioidal_, canonical_;
  std::vector<bool> free_;
  std::vector<bool> sum_used_;
  std::vector<UnorderedPair> pairs_;
};

void validate(const SearchSpec& spec) {
  require_valid_order(spec.order);
  if (spec.limit && *spec.limit == 0) throw Error(ErrorKind::Parse, "search limit must be >= 1");
  if (spec.shard && (spec.shard->total == 0 || spec.shard->index >= spec.shard->total)) {
    throw Error(ErrorKind::Parse, "shard index must be below the shard total");
  }
}

Collector run_shard(const SearchSpec& spec) {
  Collector out(spec);
  switch (resolve_strategy(spec)) {
    case SearchStrategy::Exhaustive: {
      if (spec.order > spec.exhaustive_bound) {
        throw Error(ErrorKind::SearchInfeasible,
                    "exhaustive enumeration of order " + std::to_string(spec.order) + " exceeds the bound " +
                        std::to_string(spec.exhaustive_bound));
      }
      ExhaustiveWalk walk(spec.order, out);
      walk.run(true);
      break;
    }
    case SearchStrategy::SkolemBacktrack: {
      if (!requires_predicate(spec, Predicate::Starter) || !requires_predicate(spec, Predicate::Skolem)) {
        throw Error(ErrorKind::SearchInfeasible, "Skolem backtracking only enumerates Skolem starters; "
                                                 "require both starter and skolem");
      }
      SkolemBacktrack walk(spec, out);
      walk.run((spec.order - 1) / 2);
      break;
    }
    case SearchStrategy::Auto:
      break;
  }
  return out;
}

SearchResult merge(const SearchSpec& spec, std::vector<Collector>& shards) {
  SearchResult result;
  std::vector<Hit> hits;
  for (auto& s : shards) {
    result.count += s.count_;
    result.nodes += s.nodes_;
    result.complete = result.complete && s.complete_;
    std::move(s.hits_.begin(), s.hits_.end(), std::back_inserter(hits));
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return a.branch != b.branch ? a.branch < b.branch : a.seq < b.seq;
  });
  const std::uint64_t cap = result_cap(spec);
  if (hits.size() > cap) hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(cap), hits.end());
  result.count = std::min(result.count, cap);
  for (auto& h : hits) result.partitions.push_back(std::move(h.partition));
  std::sort(result.partitions.begin(), result.partitions.end());
  if (spec.mode != SearchMode::Count) result.count = result.partitions.size();
  return result;
}

}  // namespace

SearchStrategy resolve_strategy(const SearchSpec& spec) {
  if (spec.strategy != SearchStrategy::Auto) return spec.strategy;
  if (requires_predicate(spec, Predicate::Starter) && requires_predicate(spec, Predicate::Skolem)) {
    return SearchStrategy::SkolemBacktrack;
  }
  return SearchStrategy::Exhaustive;
}

SearchResult search(const SearchSpec& spec) {
  validate(spec);
  std::vector<Collector> shards;
  shards.push_back(run_shard(spec));
  return merge(spec, shards);
}

SearchResult search_parallel(const SearchSpec& spec, std::size_t workers) {
  validate(spec);
  if (spec.shard) throw Error(ErrorKind::Parse, "search_parallel assigns shards itself");
  workers = std::max<std::size_t>(workers, 1);

  std::vector<SearchSpec> specs(workers, spec);
  for (std::size_t i = 0; i < workers; ++i) specs[i].shard = Shard{i, workers};

  std::vector<std::optional<Collector>> outputs(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) {
      threads.emplace_back([&, i] {
        try {
          outputs[i].emplace(run_shard(specs[i]));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Collector> shards;
  for (auto& o : outputs) shards.push_back(std::move(*o));
  return merge(spec, shards);
}

}  // namespace starter_forge
