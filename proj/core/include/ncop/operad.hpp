#pragma once

#include "ncop/partition.hpp"
#include "ncop/sums.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ncop {

// Glue and cut parts of the partial composition.  Relabeling: elements j of
// pi stay j for j < i and become j+n-1 for j > i; element k of nu becomes
// i+k-1 for k >= 1; segment i of pi and segment 0 of nu are identified and
// vanish.  The glue part merges the two incident blocks; the cut part keeps
// them separate and exists iff both incident blocks have >= 3 elements
// (otherwise cutting would create a singleton).
struct ComposedParts {
  NCPartition glue;
  std::optional<NCPartition> cut;
};
ComposedParts compose_parts(const NCPartition& pi, int i, const NCPartition& nu);

FormalSum compose_basis(const NCPartition& pi, int i, const NCPartition& nu);
NCPartition gr_compose_basis(const NCPartition& pi, int i, const NCPartition& nu);

// bilinear extensions
template <class C>
BasisSum<C> compose(const BasisSum<C>& f, int i, const BasisSum<C>& g) {
  if (i < 1 || i > f.arity())
    throw IndexOutOfRange("slot " + std::to_string(i) + " in arity " +
                          std::to_string(f.arity()));
  BasisSum<C> out(f.arity() + g.arity() - 1);
  for (const auto& [pi, cf] : f.terms())
    for (const auto& [nu, cg] : g.terms()) {
      ComposedParts parts = compose_parts(pi, i, nu);
      C c = cf * cg;
      out.add(parts.glue, c);
      if (parts.cut) out.add(*parts.cut, c);
    }
  return out;
}

template <class C>
BasisSum<C> gr_compose(const BasisSum<C>& f, int i, const BasisSum<C>& g) {
  if (i < 1 || i > f.arity())
    throw IndexOutOfRange("slot " + std::to_string(i) + " in arity " +
                          std::to_string(f.arity()));
  BasisSum<C> out(f.arity() + g.arity() - 1);
  for (const auto& [pi, cf] : f.terms())
    for (const auto& [nu, cg] : g.terms()) out.add(gr_compose_basis(pi, i, nu), cf * cg);
  return out;
}

struct CheckResult {
  bool ok = true;
  std::string detail;  // inputs and both sides, on failure
  explicit operator bool() const { return ok; }
};

CheckResult unit_law_check(const NCPartition& pi);
// (pi o_i nu) o_{j+arity(nu)-1} mu  =  (pi o_j mu) o_i nu   for i < j
CheckResult parallel_axiom_check(const NCPartition& pi, int i, const NCPartition& nu, int j,
                                 const NCPartition& mu, bool graded = false);
// pi o_i (nu o_j mu)  =  (pi o_i nu) o_{i+j-1} mu
CheckResult sequential_axiom_check(const NCPartition& pi, int i, const NCPartition& nu, int j,
                                   const NCPartition& mu, bool graded = false);

struct SuiteReport {
  std::string name;
  long long instances = 0;
  std::vector<std::string> failures;  // capped sample
  long long failure_count = 0;
  bool ok() const { return failure_count == 0; }
  nlohmann::json to_json() const;
};

// unit laws plus the parallel and sequential axioms over every basis tuple
// with total arity <= max_total_arity, all index choices
SuiteReport axiom_suite(int max_total_arity, bool graded = false);

// Tests rotation compatibility for both uniform conventions: with r = rotate
// by +1 (or -1 for the inverse convention),
//   r(pi o_i nu) = r(pi) o_{i+1} nu        for 1 <= i <= m-1,
//   r(pi o_m nu) = r(nu) o_1 r(pi),
// over all pairs with arity(pi) + arity(nu) <= max_total_arity.
struct CyclicReport {
  long long instances = 0;
  bool forward_ok = true;    // r = rotate(.,+1)
  bool backward_ok = true;   // r = rotate(.,-1)
  std::string convention;    // name of the convention that holds
  std::vector<std::string> failures;
  nlohmann::json to_json() const;
  bool ok() const { return forward_ok || backward_ok; }
};
CyclicReport cyclic_compat_check(int max_total_arity);

template <class C>
BasisSum<C> rotate(const BasisSum<C>& s, long long k) {
  BasisSum<C> out(s.arity());
  for (const auto& [pi, c] : s.terms()) out.add(rotate(pi, k), c);
  return out;
}

}  // namespace ncop
