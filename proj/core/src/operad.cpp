#include "ncop/operad.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ncop {

ComposedParts compose_parts(const NCPartition& pi, int i, const NCPartition& nu) {
  const int m = pi.arity();
  const int n = nu.arity();
  if (i < 1 || i > m)
    throw IndexOutOfRange("slot " + std::to_string(i) + " in arity " + std::to_string(m));

  std::vector<std::vector<int>> common;  // blocks untouched by the gluing
  std::vector<int> from_pi;              // the block of pi containing i, minus i, relabeled
  for (const auto& b : pi.blocks()) {
    std::vector<int> nb;
    bool hit = false;
    for (int j : b) {
      if (j == i) { hit = true; continue; }
      nb.push_back(j < i ? j : j + n - 1);
    }
    if (hit)
      from_pi = std::move(nb);
    else
      common.push_back(std::move(nb));
  }
  std::vector<int> from_nu;  // the block of nu containing 0, minus 0, relabeled
  for (const auto& b : nu.blocks()) {
    std::vector<int> nb;
    bool hit = false;
    for (int k : b) {
      if (k == 0) { hit = true; continue; }
      nb.push_back(i + k - 1);
    }
    if (hit)
      from_nu = std::move(nb);
    else
      common.push_back(std::move(nb));
  }

  const int arity_out = m + n - 1;
  std::vector<std::vector<int>> glue_blocks = common;
  std::vector<int> merged = from_pi;
  merged.insert(merged.end(), from_nu.begin(), from_nu.end());
  glue_blocks.push_back(std::move(merged));
  ComposedParts out{NCPartition::validate(arity_out, std::move(glue_blocks)), std::nullopt};

  // cutting along the gluing line keeps the two parts separate; it is
  // omitted exactly when either part would be a singleton
  if (from_pi.size() >= 2 && from_nu.size() >= 2) {
    std::vector<std::vector<int>> cut_blocks = std::move(common);
    cut_blocks.push_back(std::move(from_pi));
    cut_blocks.push_back(std::move(from_nu));
    out.cut = NCPartition::validate(arity_out, std::move(cut_blocks));
  }
  return out;
}

FormalSum compose_basis(const NCPartition& pi, int i, const NCPartition& nu) {
  ComposedParts parts = compose_parts(pi, i, nu);
  FormalSum s(pi.arity() + nu.arity() - 1);
  s.add(parts.glue, 1);
  if (parts.cut) s.add(*parts.cut, 1);
  return s;
}

NCPartition gr_compose_basis(const NCPartition& pi, int i, const NCPartition& nu) {
  return compose_parts(pi, i, nu).glue;
}

CheckResult unit_law_check(const NCPartition& pi) {
  const NCPartition e = unit_partition();
  const FormalSum id = FormalSum::of(pi);
  for (int i = 1; i <= pi.arity(); ++i) {
    FormalSum lhs = compose_basis(pi, i, e);
    if (lhs != id)
      return {false, pi.str() + " o_" + std::to_string(i) + " unit = " + lhs.str()};
  }
  FormalSum lhs = compose_basis(e, 1, pi);
  if (lhs != id) return {false, "unit o_1 " + pi.str() + " = " + lhs.str()};
  return {};
}

namespace {

FormalSum compose_either(const FormalSum& f, int i, const FormalSum& g, bool graded) {
  return graded ? gr_compose(f, i, g) : compose(f, i, g);
}

}  // namespace

CheckResult parallel_axiom_check(const NCPartition& pi, int i, const NCPartition& nu, int j,
                                 const NCPartition& mu, bool graded) {
  const FormalSum fp = FormalSum::of(pi), fn = FormalSum::of(nu), fm = FormalSum::of(mu);
  FormalSum lhs = compose_either(compose_either(fp, i, fn, graded), j + nu.arity() - 1, fm, graded);
  FormalSum rhs = compose_either(compose_either(fp, j, fm, graded), i, fn, graded);
  if (lhs == rhs) return {};
  return {false, "parallel(" + pi.str() + ", i=" + std::to_string(i) + ", " + nu.str() +
                     ", j=" + std::to_string(j) + ", " + mu.str() + "): lhs = " + lhs.str() +
                     ", rhs = " + rhs.str()};
}

CheckResult sequential_axiom_check(const NCPartition& pi, int i, const NCPartition& nu, int j,
                                   const NCPartition& mu, bool graded) {
  const FormalSum fp = FormalSum::of(pi), fn = FormalSum::of(nu), fm = FormalSum::of(mu);
  FormalSum lhs = compose_either(fp, i, compose_either(fn, j, fm, graded), graded);
  FormalSum rhs = compose_either(compose_either(fp, i, fn, graded), i + j - 1, fm, graded);
  if (lhs == rhs) return {};
  return {false, "sequential(" + pi.str() + ", i=" + std::to_string(i) + ", " + nu.str() +
                     ", j=" + std::to_string(j) + ", " + mu.str() + "): lhs = " + lhs.str() +
                     ", rhs = " + rhs.str()};
}

nlohmann::json SuiteReport::to_json() const {
  return {{"suite", name},
          {"instances", instances},
          {"failures", failure_count},
          {"failure_samples", failures},
          {"pass", ok()}};
}

SuiteReport axiom_suite(int max_total_arity, bool graded) {
  SuiteReport rep;
  rep.name = graded ? "graded operad axioms" : "operad axioms";
  std::vector<std::vector<NCPartition>> basis(static_cast<std::size_t>(max_total_arity) + 1);
  for (int a = 1; a <= max_total_arity; ++a) basis[a] = enumerate(a);
  auto record = [&](const CheckResult& r) {
    ++rep.instances;
    if (!r.ok) {
      ++rep.failure_count;
      if (rep.failures.size() < 5) rep.failures.push_back(r.detail);
    }
  };
  for (int a = 1; a <= max_total_arity - 1; ++a)
    for (const auto& pi : basis[a]) record(unit_law_check(pi));
  for (int m = 1; m <= max_total_arity - 2; ++m)
    for (int n = 1; m + n <= max_total_arity - 1; ++n)
      for (int p = 1; m + n + p <= max_total_arity; ++p)
        for (const auto& pi : basis[m])
          for (const auto& nu : basis[n])
            for (const auto& mu : basis[p]) {
              for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                  record(parallel_axiom_check(pi, i, nu, j, mu, graded));
              for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j)
                  record(sequential_axiom_check(pi, i, nu, j, mu, graded));
            }
  return rep;
}

nlohmann::json CyclicReport::to_json() const {
  return {{"instances", instances},
          {"forward_convention_holds", forward_ok},
          {"backward_convention_holds", backward_ok},
          {"convention", convention},
          {"failure_samples", failures},
          {"pass", ok()}};
}

CyclicReport cyclic_compat_check(int max_total_arity) {
  CyclicReport rep;
  std::vector<std::vector<NCPartition>> basis(static_cast<std::size_t>(max_total_arity));
  for (int a = 1; a <= max_total_arity - 1; ++a) basis[a] = enumerate(a);
  auto check_convention = [&](int dir, bool& ok_flag) {
    for (int m = 1; m <= max_total_arity - 1; ++m)
      for (int n = 1; m + n <= max_total_arity; ++n)
        for (const auto& pi : basis[m])
          for (const auto& nu : basis[n]) {
            for (int i = 1; i <= m - 1; ++i) {
              ++rep.instances;
              FormalSum lhs = rotate(compose_basis(pi, i, nu), dir);
              FormalSum rhs = compose(FormalSum::of(rotate(pi, dir)), i + 1, FormalSum::of(nu));
              if (lhs != rhs) {
                ok_flag = false;
                if (rep.failures.size() < 5)
                  rep.failures.push_back("dir=" + std::to_string(dir) + " shift: " + pi.str() +
                                         " o_" + std::to_string(i) + " " + nu.str());
              }
            }
            ++rep.instances;
            FormalSum lhs = rotate(compose_basis(pi, m, nu), dir);
            FormalSum rhs =
                compose(FormalSum::of(rotate(nu, dir)), 1, FormalSum::of(rotate(pi, dir)));
            if (lhs != rhs) {
              ok_flag = false;
              if (rep.failures.size() < 5)
                rep.failures.push_back("dir=" + std::to_string(dir) + " last slot: " + pi.str() +
                                       " o_" + std::to_string(m) + " " + nu.str());
            }
          }
  };
  check_convention(+1, rep.forward_ok);
  check_convention(-1, rep.backward_ok);
  if (rep.forward_ok && rep.backward_ok)
    rep.convention = "both";
  else if (rep.forward_ok)
    rep.convention = "forward rotation (j -> j+1), special last slot";
  else if (rep.backward_ok)
    rep.convention = "backward rotation (j -> j-1), special last slot";
  else
    rep.convention = "none";
  return rep;
}

}  // namespace ncop
