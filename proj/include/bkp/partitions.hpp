#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkp/rat.hpp"

namespace bkp {

// Partition with strictly decreasing positive parts.
struct StrictPartition {
  std::vector<long> parts;

  long weight() const;
  size_t length() const { return parts.size(); }
  std::string to_string() const;
  bool operator==(const StrictPartition&) const = default;
};

// Partition with odd positive parts, weakly decreasing.
struct OddPartition {
  std::vector<long> parts;

  long weight() const;
  size_t length() const { return parts.size(); }
  std::string to_string() const;
  bool operator==(const OddPartition&) const = default;
};

// All strict partitions of weight exactly w, in lexicographically decreasing
// order of the part vectors. strict_partitions(0) = {()}.
std::vector<StrictPartition> strict_partitions(long w);

// All partitions of w into odd parts, lexicographically decreasing.
std::vector<OddPartition> odd_partitions(long w);

// All strict partitions of weight 1..w (the empty partition excluded),
// ordered by weight, then lexicographically decreasing.
std::vector<StrictPartition> strict_partitions_up_to(long w);
std::vector<OddPartition> odd_partitions_up_to(long w);

// |Aut| of the multiset of parts times the product of parts:
// prod_j m_j! * prod_i mu_i. For (3,3,1): 2! * 9 = 18.
Rat sym_factor(const OddPartition& mu);

// Genus from the ramification count: b * r = 2g - 2 + length + weight.
// Returns the genus when it is a nonnegative integer, nullopt otherwise.
std::optional<long> rh_genus(const OddPartition& mu, long b, int r);

}  // namespace bkp
