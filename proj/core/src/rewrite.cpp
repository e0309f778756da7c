#include "ncop/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

namespace ncop {

namespace {

// shape match: pattern leaves match any subtree
bool match(const Term& t, const Term& pat) {
  if (pat->is_leaf()) return true;
  if (t->is_leaf() || t->op() != pat->op()) return false;
  for (std::size_t k = 0; k < pat->kids().size(); ++k)
    if (!match(t->kids()[k], pat->kids()[k])) return false;
  return true;
}

void captures_rec(const Term& t, const Term& pat, std::vector<Term>& out) {
  if (pat->is_leaf()) {
    out.push_back(t);
    return;
  }
  for (std::size_t k = 0; k < pat->kids().size(); ++k)
    captures_rec(t->kids()[k], pat->kids()[k], out);
}

std::vector<Term> captures(const Term& t, const Term& pat) {
  std::vector<Term> out;
  captures_rec(t, pat, out);
  return out;
}

Term instantiate(const Term& pat, const std::vector<Term>& caps, int& next) {
  if (pat->is_leaf()) return caps[static_cast<std::size_t>(next++)];
  std::vector<Term> kids;
  kids.reserve(pat->kids().size());
  for (const auto& k : pat->kids()) kids.push_back(instantiate(k, caps, next));
  return TermNode::node(pat->op(), std::move(kids));
}

Term instantiate(const Term& pat, const std::vector<Term>& caps) {
  int next = 0;
  return instantiate(pat, caps, next);
}

Term rebuild(const Term& t, const std::vector<int>& path, std::size_t depth, const Term& sub) {
  if (depth == path.size()) return sub;
  std::vector<Term> kids = t->kids();
  auto k = static_cast<std::size_t>(path[depth]);
  kids[k] = rebuild(kids[k], path, depth + 1, sub);
  return TermNode::node(t->op(), std::move(kids));
}

// one rewrite step at the redex `path` with `rule`
TermSum rewrite_at(const Term& t, const std::vector<int>& path, const RewriteRule& rule) {
  const Term* cur = &t;
  for (int k : path) cur = &(*cur)->kids()[static_cast<std::size_t>(k)];
  std::vector<Term> caps = captures(*cur, rule.lhs);
  TermSum out(t->arity());
  for (const auto& [pat, c] : rule.rhs.terms())
    out.add(rebuild(t, path, 0, instantiate(pat, caps)), c);
  return out;
}

struct Redex {
  std::vector<int> path;
  std::size_t rule;
};

void collect_redexes(const Term& t, std::vector<int>& path, std::vector<Redex>& out,
                     bool innermost_order) {
  auto visit_here = [&] {
    const auto& rs = rules();
    for (std::size_t r = 0; r < rs.size(); ++r)
      if (match(t, rs[r].lhs)) out.push_back({path, r});
  };
  if (!innermost_order) visit_here();
  if (!t->is_leaf())
    for (std::size_t k = 0; k < t->kids().size(); ++k) {
      path.push_back(static_cast<int>(k));
      collect_redexes(t->kids()[k], path, out, innermost_order);
      path.pop_back();
    }
  if (innermost_order) visit_here();
}

std::vector<Redex> redexes(const Term& t, bool innermost_order) {
  std::vector<Redex> out;
  std::vector<int> path;
  collect_redexes(t, path, out, innermost_order);
  return out;
}

TermSum make_rhs(std::initializer_list<std::pair<Term, int>> terms) {
  TermSum s(terms.begin()->first->arity());
  for (const auto& [t, c] : terms) s.add(t, c);
  return s;
}

std::vector<RewriteRule> build_rules() {
  const Term a = leaf();
  std::vector<RewriteRule> rs;
  // tri with mul in slot 2
  rs.push_back({"rule1", t_tri(a, t_mul(a, a), a),
                TermSum::of(t_tri(t_mul(a, a), a, a))});
  // tri with mul in slot 3
  rs.push_back({"rule2", t_tri(a, a, t_mul(a, a)),
                TermSum::of(t_mul(t_tri(a, a, a), a))});
  // tri with tri in slot 3
  rs.push_back({"rule3", t_tri(a, a, t_tri(a, a, a)),
                TermSum::of(t_tri(t_tri(a, a, a), a, a))});
  // mul whose left child is mul(x, mul(y,z))
  rs.push_back({"rule4", t_mul(t_mul(a, t_mul(a, a)), a),
                make_rhs({{t_mul(t_mul(t_mul(a, a), a), a), 1},
                          {t_mul(a, t_tri(a, a, a)), -1},
                          {t_mul(t_tri(a, a, a), a), 1}})});
  // tri whose slot 1 is mul(x, mul(y,z))
  rs.push_back({"rule5", t_tri(t_mul(a, t_mul(a, a)), a, a),
                make_rhs({{t_tri(t_mul(t_mul(a, a), a), a, a), 1},
                          {t_tri(a, t_tri(a, a, a), a), -1},
                          {t_tri(t_tri(a, a, a), a, a), 1}})});
  // mul whose right child is mul(x, mul(y,z))
  rs.push_back({"rule6", t_mul(a, t_mul(a, t_mul(a, a))),
                make_rhs({{t_mul(a, t_mul(t_mul(a, a), a)), 1},
                          {t_mul(t_mul(a, a), t_mul(a, a)), 1},
                          {t_mul(t_mul(t_mul(a, a), a), a), -1},
                          {t_mul(a, t_tri(a, a, a)), 1},
                          {t_tri(t_mul(a, a), a, a), -1}})});
  for (const auto& r : rs) {
    for (const auto& [t, c] : r.rhs.terms()) {
      (void)c;
      if (cmp_terms(r.lhs, t) <= 0)
        throw std::logic_error("rule " + r.id + " is not oriented: " + print_term(r.lhs) +
                               " <= " + print_term(t));
    }
  }
  return rs;
}

}  // namespace

const std::vector<RewriteRule>& rules() {
  static const std::vector<RewriteRule> rs = build_rules();
  return rs;
}

bool is_normal(const Term& t) {
  for (const auto& r : rules())
    if (match(t, r.lhs)) return false;
  if (t->is_leaf()) return true;
  for (const auto& k : t->kids())
    if (!is_normal(k)) return false;
  return true;
}

TermSum normal_form(const TermSum& s, Strategy strategy, unsigned seed) {
  for (const auto& [t, c] : s.terms()) {
    (void)c;
    if (contains_ttri(t))
      throw std::invalid_argument("normal_form expects the reduced signature; "
                                  "eliminate the double bracket first");
  }
  std::mt19937 rng(seed);
  TermSum out(s.arity());
  TermSum work = s;
  const Int bound = count_monomials(s.arity(), Signature::Reduced);
  Int steps = 0;
  while (!work.is_zero()) {
    auto it = work.terms().begin();  // largest monomial
    Term t = it->first;
    Rat c = it->second;
    if (is_normal(t)) {
      out.add(t, c);
      work.add(t, -c);
      continue;
    }
    Redex chosen;
    if (strategy == Strategy::Random) {
      auto all = redexes(t, true);
      chosen = all[rng() % all.size()];  // plain modulo keeps runs reproducible across platforms
    } else {
      chosen = redexes(t, strategy == Strategy::LeftInner).front();
    }
    TermSum replaced = rewrite_at(t, chosen.path, rules()[chosen.rule]);
    work.add(t, -c);
    work += c * replaced;
    ++steps;
    if (steps > bound)
      throw std::logic_error("rewriting exceeded the monomial count bound");  // cannot happen
  }
  return out;
}

TermSum normal_form(const Term& t, Strategy strategy, unsigned seed) {
  return normal_form(TermSum::of(t), strategy, seed);
}

TermSum eliminate_double_bracket(const Term& t) {
  if (t->is_leaf()) return TermSum::of(t);
  std::vector<TermSum> kids;
  kids.reserve(t->kids().size());
  for (const auto& k : t->kids()) kids.push_back(eliminate_double_bracket(k));
  // multilinear assembly of op over the expanded children
  auto assemble = [&](Op op, const std::vector<const TermSum*>& parts) {
    int arity = 0;
    for (const auto* p : parts) arity += p->arity();
    TermSum acc(arity);
    for (const auto* p : parts)
      if (p->is_zero()) return acc;
    std::vector<TermSum::Map::const_iterator> pick;
    pick.reserve(parts.size());
    for (const auto* p : parts) pick.push_back(p->terms().begin());
    for (;;) {
      std::vector<Term> ks;
      Rat c(1);
      for (std::size_t q = 0; q < parts.size(); ++q) {
        ks.push_back(pick[q]->first);
        c *= pick[q]->second;
      }
      acc.add(TermNode::node(op, std::move(ks)), c);
      std::size_t q = 0;
      for (; q < parts.size(); ++q) {
        if (++pick[q] != parts[q]->terms().end()) break;
        pick[q] = parts[q]->terms().begin();
      }
      if (q == parts.size()) break;
    }
    return acc;
  };
  const std::vector<const TermSum*> ptrs = [&] {
    std::vector<const TermSum*> v;
    for (const auto& k : kids) v.push_back(&k);
    return v;
  }();
  if (t->op() != Op::Ttri) return assemble(t->op(), ptrs);
  // {{a,b,c}} = (a.b).c - a.(b.c) + {a,b,c}
  const TermSum ab = assemble(Op::Mul, {ptrs[0], ptrs[1]});
  const TermSum bc = assemble(Op::Mul, {ptrs[1], ptrs[2]});
  TermSum out = assemble(Op::Mul, {&ab, ptrs[2]});
  out -= assemble(Op::Mul, {ptrs[0], &bc});
  out += assemble(Op::Tri, ptrs);
  return out;
}

TermSum eliminate_double_bracket(const TermSum& s) {
  TermSum out(s.arity());
  for (const auto& [t, c] : s.terms()) out += c * eliminate_double_bracket(t);
  return out;
}

namespace {

struct AllEnum {
  Signature sig;
  std::map<int, std::vector<Term>> cache;
  const std::vector<Term>& all(int n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) {
      out.push_back(leaf());
    } else {
      for (int i = 1; i <= n - 1; ++i)
        for (const auto& u : all(i))
          for (const auto& v : all(n - i)) out.push_back(t_mul(u, v));
      if (sig != Signature::Binary)
        for (int i = 1; i <= n - 2; ++i)
          for (int j = 1; i + j <= n - 1; ++j)
            for (const auto& u : all(i))
              for (const auto& v : all(j))
                for (const auto& w : all(n - i - j)) {
                  out.push_back(t_tri(u, v, w));
                  if (sig == Signature::Full) out.push_back(t_ttri(u, v, w));
                }
    }
    return cache.emplace(n, std::move(out)).first->second;
  }
};

// Grammar of normal monomials.  With V the normal monomials that are not of
// the shape mul(x, mul(y,z)) ("z-shape"), the forbidden patterns say exactly:
//   mul-top, not z:  mul(V, leaf or tri-top V)
//   z-shape:         mul(V, mul-top non-z)      -- possible only at the root
//   tri-top:         tri(V, leaf or tri-top V, leaf)
struct NormalEnum {
  std::map<int, std::vector<Term>> v_cache, m_cache, g_cache, z_cache;

  const std::vector<Term>& tri_top(int n) {  // G
    auto it = g_cache.find(n);
    if (it != g_cache.end()) return it->second;
    std::vector<Term> out;
    if (n >= 3)
      for (int i = 1; i <= n - 2; ++i) {
        int j = n - 1 - i;
        for (const auto& u : non_z(i))
          for (const auto& v : leaf_or_tri(j)) out.push_back(t_tri(u, v, leaf()));
      }
    return g_cache.emplace(n, std::move(out)).first->second;
  }

  std::vector<Term> leaf_or_tri(int n) {
    if (n == 1) return {leaf()};
    return tri_top(n);
  }

  const std::vector<Term>& mul_top_non_z(int n) {  // M \ Z
    auto it = m_cache.find(n);
    if (it != m_cache.end()) return it->second;
    std::vector<Term> out;
    if (n >= 2)
      for (int i = 1; i <= n - 1; ++i)
        for (const auto& u : non_z(i))
          for (const auto& v : leaf_or_tri(n - i)) out.push_back(t_mul(u, v));
    return m_cache.emplace(n, std::move(out)).first->second;
  }

  const std::vector<Term>& z_shape(int n) {  // Z
    auto it = z_cache.find(n);
    if (it != z_cache.end()) return it->second;
    std::vector<Term> out;
    if (n >= 3)
      for (int i = 1; i <= n - 2; ++i)
        for (const auto& u : non_z(i))
          for (const auto& v : mul_top_non_z(n - i)) out.push_back(t_mul(u, v));
    return z_cache.emplace(n, std::move(out)).first->second;
  }

  const std::vector<Term>& non_z(int n) {  // V = leaf + (M\Z) + G
    auto it = v_cache.find(n);
    if (it != v_cache.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) out.push_back(leaf());
    for (const auto& t : mul_top_non_z(n)) out.push_back(t);
    for (const auto& t : tri_top(n)) out.push_back(t);
    return v_cache.emplace(n, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Term> enumerate_all(int n, Signature sig) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  AllEnum e{sig, {}};
  std::vector<Term> out = e.all(n);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return cmp_terms(a, b) < 0; });
  return out;
}

std::vector<Term> enumerate_normal(int n) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  NormalEnum e;
  std::vector<Term> out = e.non_z(n);
  for (const auto& t : e.z_shape(n)) out.push_back(t);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return cmp_terms(a, b) < 0; });
  return out;
}

Int count_monomials(int n, Signature sig) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
  std::vector<Int> f(static_cast<std::size_t>(n) + 1, 0);
  f[1] = 1;
  for (int d = 2; d <= n; ++d) {
    Int total = 0;
    for (int i = 1; i <= d - 1; ++i) total += f[i] * f[d - i];
    if (sig != Signature::Binary) {
      Int tri_total = 0;
      for (int i = 1; i <= d - 2; ++i)
        for (int j = 1; i + j <= d - 1; ++j) tri_total += f[i] * f[j] * f[d - i - j];
      total += sig == Signature::Full ? 2 * tri_total : tri_total;
    }
    f[d] = total;
  }
  return f[n];
}

}  // namespace ncop
