#pragma once

#include "ncop/errors.hpp"
#include "ncop/numbers.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace ncop {

// Noncrossing partition of {0,...,n} without singleton blocks.
// Canonical form: blocks sorted by minimum element, elements ascending
// within a block.  Values are immutable after construction.
class NCPartition {
 public:
  // Checks all invariants and canonicalizes.  Throws NotAPartition,
  // SingletonBlock or Crossing (with a witness quadruple).
  static NCPartition validate(int n, std::vector<std::vector<int>> raw_blocks);

  // Text form "{0,1,4,5}|{2,3}"; arity is implicit from the max element.
  static NCPartition parse(const std::string& text);

  // {"n":5,"blocks":[[0,1,4,5],[2,3]]}
  static NCPartition from_json(const nlohmann::json& j);

  int arity() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int blocks_count() const { return static_cast<int>(blocks_.size()); }

  // canonical text form; doubles as the comparison key
  const std::string& str() const { return key_; }

  nlohmann::json to_json() const;

  friend bool operator==(const NCPartition& a, const NCPartition& b) { return a.key_ == b.key_; }
  friend bool operator!=(const NCPartition& a, const NCPartition& b) { return !(a == b); }
  // enumeration order: lexicographic on the canonical text form
  friend bool operator<(const NCPartition& a, const NCPartition& b) { return a.key_ < b.key_; }

 private:
  NCPartition() = default;

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::string key_;
};

// named basis elements
NCPartition unit_partition();       // {{0,1}}
NCPartition gen_mul();              // {{0,1,2}}
NCPartition gen_tri();              // {{0,3},{1,2}}, counterpart of the single bracket
NCPartition gen_ttri();             // {{0,1},{2,3}}, counterpart of the double bracket
NCPartition one_block(int n);       // {{0,...,n}}

// relabel j -> (j+k) mod (n+1); stays noncrossing and singleton-free
NCPartition rotate(const NCPartition& pi, long long k);

// some block {i,...,j} of consecutive integers with i >= 1; among those the
// one with the smallest minimum.  Throws NoSuchBlock for one-block input.
std::vector<int> consecutive_block(const NCPartition& pi);

// all of B(n) in canonical order, built recursively over the block of the
// first element of each interval (not by filtering all set partitions)
std::vector<NCPartition> enumerate(int n);

// |B(n)| from the recurrence E = 1 - tE + tE^2 + t^2E^2 for the counting
// series E(t) of singleton-free noncrossing partitions of an m-set
// (decomposition over the block of the first element); count(n) = E(n+1)
Int count(int n);

std::map<int, Int> count_by_blocks(int n);

}  // namespace ncop
