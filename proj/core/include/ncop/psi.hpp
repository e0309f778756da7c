#pragma once

#include "ncop/numbers.hpp"
#include "ncop/partition.hpp"
#include "ncop/sums.hpp"
#include "ncop/term.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace ncop {

// generator images of the evaluation homomorphism into partition sums
const QFormalSum& psi_image(Op op);   // mul -> +{0,1,2}, brackets carry -1
const QFormalSum& free_image(Op op);  // all images with coefficient +1

QFormalSum eval_with_images(const Term& t, const QFormalSum& mul_img, const QFormalSum& tri_img,
                            const QFormalSum& ttri_img);

QFormalSum eval_psi(const Term& t);
QFormalSum eval_psi(const TermSum& s);
QFormalSum eval_free(const Term& t);
QFormalSum eval_free(const TermSum& s);

// glue-only evaluation with positive images; lands on a single partition
NCPartition gr_eval_free(const Term& t);

int bracket_count(const Term& t);

struct RelationCheck {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> relations;   // defining relations, as differences
  std::vector<RelationCheck> identities;  // generator compositions landing on one basis element
  std::vector<RelationCheck> rules;       // rewrite rules, lhs - rhs
  bool ok() const;
  nlohmann::json to_json() const;
};

RelationReport verify_relations();

struct RankReport {
  int arity = 0;
  std::size_t normal_count = 0;
  std::size_t rank = 0;
  Int expected = 0;
  bool pass = false;
  nlohmann::json to_json() const;
};

// images of the normal monomials must be linearly independent and exactly
// fill the arity-n component
RankReport rank_check(int n);

// preimage with eval_free(factorize(pi)) == 1*pi
TermSum factorize(const NCPartition& pi);

struct KernelReport {
  int arity = 0;
  std::size_t monomial_count = 0;
  std::size_t dim = 0;
  std::vector<TermSum> basis;
  bool verified = false;  // every basis vector evaluates to zero
  nlohmann::json to_json() const;
};

// kernel of evaluation restricted to pure binary monomials
KernelReport binary_kernel(int n);

struct FiltrationReport {
  int arity = 0;
  int weight = 0;
  bool inclusion_ok = false;
  bool leading_ok = false;
  bool span_checked = false;
  bool span_ok = true;
  std::size_t span_rank = 0;
  Int span_expected = 0;
  std::string detail;
  bool ok() const { return inclusion_ok && leading_ok && (!span_checked || span_ok); }
  nlohmann::json to_json() const;
};

// weight filtration: monomials of weight <= k land on partitions with at
// least n-k blocks, the weight-k leading coefficient matches the signed
// glue-only evaluation, and (for small n) the images span the whole layer
FiltrationReport filtration_check(int n, int k);

}  // namespace ncop
