#pragma once

// Test-only helpers: fixture loading and independent brute-force enumeration
// of 2-partitions.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "starter_forge/io.hpp"
#include "starter_forge/zn.hpp"

namespace test_support {

namespace sf = starter_forge;

inline sf::TwoPartition fixture(const std::string& name) {
  return sf::load_partition_document(std::string(STARTER_FORGE_DATA_DIR) + "/fixtures/" + name + ".json").partition;
}

inline sf::TwoPartition tp(std::int64_t n, std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  return sf::make_two_partition(n, pairs);
}

namespace detail {
inline void enumerate(std::vector<sf::Residue>& rest, std::vector<std::pair<std::int64_t, std::int64_t>>& acc,
                      std::int64_t n, std::vector<sf::TwoPartition>& out) {
  if (rest.empty()) {
    out.push_back(sf::make_two_partition(n, acc));
    return;
  }
  const sf::Residue a = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) {
    const sf::Residue b = rest[i];
    std::vector<sf::Residue> next;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k != i) next.push_back(rest[k]);
    }
    acc.emplace_back(a, b);
    enumerate(next, acc, n, out);
    acc.pop_back();
  }
}
}  // namespace detail

// Every 2-partition of Z_n^*, (n-2)!! of them.
inline std::vector<sf::TwoPartition> all_two_partitions(std::int64_t n) {
  std::vector<sf::Residue> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::pair<std::int64_t, std::int64_t>> acc;
  std::vector<sf::TwoPartition> out;
  detail::enumerate(rest, acc, n, out);
  return out;
}

// A uniformly shuffled 2-partition of Z_n^*.
inline sf::TwoPartition random_two_partition(std::int64_t n, std::mt19937_64& rng) {
  std::vector<std::int64_t> elems(static_cast<std::size_t>(n - 1));
  std::iota(elems.begin(), elems.end(), 1);
  std::shuffle(elems.begin(), elems.end(), rng);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i + 1 < elems.size(); i += 2) pairs.emplace_back(elems[i], elems[i + 1]);
  return sf::make_two_partition(n, pairs);
}

}  // namespace test_support
