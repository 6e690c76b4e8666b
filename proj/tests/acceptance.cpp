// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only 3   run criterion 3 alone

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starter_forge/covers.hpp"
#include "starter_forge/generators.hpp"
#include "starter_forge/io.hpp"
#include "starter_forge/products.hpp"
#include "starter_forge/search.hpp"
#include "starter_forge/zn.hpp"

using namespace starter_forge;

namespace {

// Pinned runtime limits, seconds.
constexpr double kLimitGolden = 1.0;
constexpr double kLimitIff = 60.0;
constexpr double kLimitNucleus = 30.0;
constexpr double kLimitExistence = 300.0;
constexpr double kLimitComposite = 10.0;

// Frozen regression constant: Skolem starters of order 11, from brute force
// over all 945 2-partitions of Z_11^*.
constexpr std::uint64_t kSkolemStartersOrder11 = 10;

// Budget for the order-35 search.
constexpr std::uint64_t kOrder35NodeBudget = 20'000'000;
constexpr std::size_t kOrder35Limit = 25;

constexpr std::uint64_t kRoundTripSeed = 20261019;
constexpr std::size_t kRoundTripSamples = 100;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

TwoPartition fixture(const std::string& name) {
  return load_partition_document(std::string(STARTER_FORGE_DATA_DIR) + "/fixtures/" + name + ".json").partition;
}

std::string compact(const TwoPartition& p) {
  auto s = render_partition_compact(p);
  s.pop_back();
  return s;
}

TwoPartition tp(std::int64_t n, std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  return make_two_partition(n, pairs);
}

std::vector<TwoPartition> all_of_order(std::int64_t n) {
  SearchSpec s;
  s.order = n;
  s.strategy = SearchStrategy::Exhaustive;
  return search(s).partitions;
}

std::uint64_t count_of(std::int64_t n, std::vector<Predicate> req, SearchStrategy strategy = SearchStrategy::Auto) {
  SearchSpec s;
  s.order = n;
  s.required = std::move(req);
  s.mode = SearchMode::Count;
  s.strategy = strategy;
  return search(s).count;
}

// ---------------------------------------------------------------------------

void c1_golden(Outcome& o) {
  const auto z3 = tp(3, {{1, 2}});
  const auto s5 = tp(5, {{1, 4}, {2, 3}});
  const auto w9 = product(z3, z3, OrientedList(z3, {{1, 2}}), OrientedList(z3, {{1, 2}})).partition;
  const auto w15 = product(s5, z3, OrientedList(s5, {{1, 4}, {2, 3}}), OrientedList(z3, {{1, 2}})).partition;
  o.require(w9 == tp(9, {{1, 2}, {4, 8}, {5, 7}, {3, 6}}), "order-9 product");
  o.require(w15 == tp(15, {{1, 4}, {2, 3}, {6, 14}, {7, 13}, {11, 9}, {12, 8}, {5, 10}}), "order-15 product");
  o.detail << " " << compact(w9) << " " << compact(w15);
}

void c2_reports(Outcome& o) {
  const auto s17 = report(fixture("s17"));
  const auto q9 = report(fixture("q9"));
  const auto t7 = report(fixture("t7"));
  const auto r5 = report(fixture("r5"));
  o.require(s17.is_strong && s17.is_skolem && s17.is_starter && !s17.is_skew && !s17.is_cardioidal, "S17");
  o.require(q9.is_skolem && q9.is_skew && !q9.is_starter && !q9.is_cardioidal, "Q9");
  o.require(t7.is_starter && t7.is_strong && t7.is_skew && !t7.is_skolem, "T7");
  o.require(r5.is_strong && r5.is_cardioidal && !r5.is_starter && !r5.is_skew, "R5");
}

struct IffTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t counterexamples = 0;
  // Restricted to right factors that are starters.
  std::uint64_t counterexamples_starter_t = 0;
  std::string first;

  void add(bool lhs, bool rhs, bool t_starter, const std::string& where) {
    ++checked;
    if (lhs != rhs) {
      ++counterexamples;
      if (t_starter) ++counterexamples_starter_t;
      if (first.empty()) first = where;
    }
  }
};

void c3_iff(Outcome& o) {
  std::vector<IffTally> tallies;
  for (const char* name : {"starter(W)", "strong(W)", "skew(W)", "skolem(W)", "starter(WX:cover)",
                           "strong(WX:cover)", "skew(WX:cover)", "skolem(WX:cover)", "starter(WX:card)",
                           "strong(WX:card)", "skew(WX:card)", "skolem(WX:card)"}) {
    tallies.push_back({name});
  }
  std::uint64_t orientation_sensitive = 0;
  for (std::int64_t n : {3, 5, 7}) {
    const auto lefts = all_of_order(n);
    for (std::int64_t m : {3, 5, 7}) {
      const auto rights = all_of_order(m);
      const auto cardioidal = cardioidal_nucleus(m);
      for (const auto& s : lefts) {
        for (const auto& t : rights) {
          const bool ts = is_starter(t);
          std::vector<bool> skolem_by_policy;
          for (auto policy : {OrientationPolicy::LoFirst, OrientationPolicy::HiFirst}) {
            std::ostringstream where;
            where << "S=" << compact(s) << " T=" << compact(t)
                  << (policy == OrientationPolicy::LoFirst ? " lo-first" : " hi-first");
            const auto tilde = orient(s, policy);
            const auto w = product(s, t, policy).partition;
            skolem_by_policy.push_back(is_skolem(w));
            tallies[0].add(is_starter(w), is_starter(s) && is_starter(t), ts, where.str());
            tallies[1].add(is_strong(w), is_strong(s) && is_skew(t), ts, where.str());
            tallies[2].add(is_skew(w), is_skew(s) && is_skew(t), ts, where.str());
            tallies[3].add(is_skolem(w), is_skolem(s) && is_skolem(t), ts, where.str());

            const auto from_cover = nucleus_from_cover(build_ordered_cover(t));
            for (const auto* x : {&from_cover, &cardioidal}) {
              const auto wx = product_with_nucleus(s, t, tilde, *x).partition;
              const std::string tag = where.str() + (x == &cardioidal ? " X=cardioidal" : " X=from-cover");
              const std::size_t b = x == &cardioidal ? 8 : 4;
              tallies[b].add(is_starter(wx), is_subtractive(*x) && is_starter(s) && is_starter(t), ts, tag);
              tallies[b + 1].add(is_strong(wx), is_skew_nucleus(*x) && is_strong(s) && is_strong(t), ts, tag);
              tallies[b + 2].add(is_skew(wx), is_skew_nucleus(*x) && is_skew(s) && is_skew(t), ts, tag);
              tallies[b + 3].add(is_skolem(wx), is_skolem_nucleus(*x) && is_skolem(s) && is_skolem(t), ts, tag);
            }
          }
          if (skolem_by_policy[0] != skolem_by_policy[1]) ++orientation_sensitive;
        }
      }
    }
  }
  for (const auto& t : tallies) {
    o.require(t.counterexamples == 0, t.name + " " + std::to_string(t.counterexamples) + "/" +
                                          std::to_string(t.checked) + " e.g. " + t.first);
  }
  o.detail << " counterexamples:";
  for (const auto& t : tallies) o.detail << ' ' << t.name << '=' << t.counterexamples;
  o.detail << " | with T a starter:";
  for (const auto& t : tallies) o.detail << ' ' << t.name << '=' << t.counterexamples_starter_t;
  o.detail << " | skolem(W) orientation-sensitive pairs=" << orientation_sensitive;
}

void c4_nucleus(Outcome& o) {
  for (std::int64_t m = 3; m <= 99; m += 2) {
    const auto c = cardioidal_nucleus(m);
    o.require(is_subtractive(c) && is_skolem_nucleus(c), "C_" + std::to_string(m) + " subtractive and Skolem");
    o.require(is_skew_nucleus(c) == (m % 3 != 0), "C_" + std::to_string(m) + " skew iff 3 does not divide m");
  }
  for (std::int64_t m : {3, 9}) {
    o.require(!find_skew_subtractive_nucleus(m).has_value(), "no skew subtractive nucleus at " + std::to_string(m));
    o.require(strong_permutations(m).empty(), "no strong permutation at " + std::to_string(m));
  }
}

void c5_existence(Outcome& o) {
  const std::vector<Predicate> strong_starter{Predicate::Starter, Predicate::Strong};
  const std::vector<Predicate> skolem_starter{Predicate::Starter, Predicate::Skolem};
  auto first = [](std::int64_t n, std::vector<Predicate> req) {
    SearchSpec s;
    s.order = n;
    s.required = std::move(req);
    s.mode = SearchMode::First;
    auto r = search(s);
    for (const auto& p : r.partitions) {
      for (Predicate pr : s.required) {
        if (!holds(pr, p)) return std::optional<bool>{};
      }
    }
    return std::optional<bool>{!r.partitions.empty()};
  };
  auto expect = [&](std::int64_t n, const std::vector<Predicate>& req, bool exists, const std::string& what) {
    const auto r = first(n, req);
    o.require(r.has_value() && *r == exists, what + " at " + std::to_string(n));
  };
  for (std::int64_t n : {3, 5, 9}) expect(n, strong_starter, false, "no strong starter");
  for (std::int64_t n : {7, 11, 13}) expect(n, strong_starter, true, "strong starter");
  for (std::int64_t n : {9, 11, 17, 19}) expect(n, skolem_starter, true, "Skolem starter");
  for (std::int64_t n : {5, 7, 13, 15}) expect(n, skolem_starter, false, "no Skolem starter");
  expect(11, {Predicate::Starter, Predicate::Strong, Predicate::Skolem}, true, "strong Skolem starter");
}

void c6_composite(Outcome& o) {
  const auto s17 = fixture("s17");
  const auto r11 = fixture("r11");
  const auto w187 = build_composite({{s17}, {r11, NucleusChoice::Cardioidal}}).product.partition;
  o.require(w187.order() == 187 && is_starter(w187) && is_strong(w187) && is_skolem(w187), "order 187");
  const auto w513 = build_composite({{fixture("s27")}, {fixture("t19"), NucleusChoice::Cardioidal}}).product.partition;
  o.require(w513.order() == 513 && is_starter(w513) && is_strong(w513) && is_skolem(w513), "order 513");
  const auto w121 = build_composite({{r11}, {r11, NucleusChoice::Cardioidal}}).product.partition;
  o.require(w121.order() == 121 && is_starter(w121) && is_skew(w121) && is_skolem(w121), "order 121 skew Skolem");
  o.require(!is_cardioidal(w121), "order 121 not cardioidal");
  o.require(w121.contains({7, 9}) && !is_cardioidal_pair({7, 9}, 121), "witness {7,9}");
  const auto r = report(w121);
  for (const auto& v : r.violations) {
    if (v.predicate == Predicate::Cardioidal && !v.witnesses.empty()) {
      o.detail << " first cardioidal witness {" << v.witnesses[0].lo << "," << v.witnesses[0].hi << "}";
    }
  }
}

void c7_round_trip(Outcome& o) {
  const SkolemSequence seq({1, 1, 5, 2, 4, 2, 3, 5, 4, 3});
  const auto t = skolem_seq_to_starter(seq);
  o.require(t == tp(11, {{1, 2}, {4, 6}, {7, 10}, {5, 9}, {3, 8}}), "sequence to order-11 starter");
  const auto back = starter_to_skolem_seq(t);
  o.require(render_skolem_sequence(back) == render_skolem_sequence(seq) && back == seq, "order-11 starter back");

  std::vector<TwoPartition> pool;
  for (std::int64_t n = 9; n <= 19; n += 2) {
    SearchSpec s;
    s.order = n;
    s.required = {Predicate::Starter, Predicate::Skolem};
    const auto found = search(s).partitions;
    pool.insert(pool.end(), found.begin(), found.end());
  }
  std::mt19937_64 rng(kRoundTripSeed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < kRoundTripSamples; ++k) {
    const auto& p = pool[pick(rng)];
    if (skolem_seq_to_starter(starter_to_skolem_seq(p)) == p) ++ok;
  }
  o.require(ok == kRoundTripSamples, "random round trips");
  o.detail << " pool=" << pool.size() << " sampled=" << kRoundTripSamples << " ok=" << ok;
}

void c8_count(Outcome& o) {
  const std::vector<Predicate> req{Predicate::Starter, Predicate::Skolem};
  const auto bt = count_of(11, req, SearchStrategy::SkolemBacktrack);
  const auto ex = count_of(11, req, SearchStrategy::Exhaustive);
  const auto total = count_of(11, {}, SearchStrategy::Exhaustive);
  o.require(total == 945, "945 2-partitions");
  o.require(bt == ex, "backtracking equals exhaustive");
  o.require(ex == kSkolemStartersOrder11, "frozen constant");
  o.detail << " backtrack=" << bt << " exhaustive=" << ex;
}

void c9_order35(Outcome& o) {
  SearchSpec s;
  s.order = 35;
  s.required = {Predicate::Starter, Predicate::Strong, Predicate::Skolem};
  s.limit = kOrder35Limit;
  s.node_budget = kOrder35NodeBudget;
  const auto r = search(s);

  const std::vector<Predicate> skolem_starter{Predicate::Starter, Predicate::Skolem};
  const auto at5 = count_of(5, skolem_starter);
  const auto at7 = count_of(7, skolem_starter);
  o.require(at5 == 0 && at7 == 0, "no Skolem starters of orders 5 and 7");
  o.require(count_of(5, {Predicate::Starter, Predicate::Strong}) == 0, "no strong starter of order 5");

  std::size_t consistent = 0;
  for (const auto& w : r.partitions) {
    const bool valid = is_starter(w) && is_strong(w) && is_skolem(w);
    // A factorisation with a left factor of order 5 or 7 would need that
    // factor to be a Skolem starter.
    const bool no5 = !decompose_product(w, 5).has_value();
    const bool no7 = !decompose_product(w, 7).has_value();
    if (valid && no5 && no7) ++consistent;
  }
  o.require(consistent == r.partitions.size(), "every found starter has no order-5 or order-7 factorisation");
  o.detail << " found=" << r.partitions.size() << " nodes=" << r.nodes << (r.complete ? " complete" : " budget-bounded")
           << " consistent=" << consistent;
}

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds, 0 = none
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only K]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "golden products", kLimitGolden, c1_golden},
      {2, "fixture reports", 0, c2_reports},
      {3, "product iff theorems", kLimitIff, c3_iff},
      {4, "nucleus laws", kLimitNucleus, c4_nucleus},
      {5, "existence by search", kLimitExistence, c5_existence},
      {6, "composite family", kLimitComposite, c6_composite},
      {7, "Skolem conversion round trip", 0, c7_round_trip},
      {8, "search count oracle", 0, c8_count},
      {9, "order-35 negative expressibility", 0, c9_order35},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0) o.require(secs < c.limit, "runtime over " + std::to_string(c.limit) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " c" << c.id << " " << c.name << " (" << timing << ")"
              << o.detail.str() << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
