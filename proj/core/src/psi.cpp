#include "ncop/psi.hpp"

#include "ncop/matrix.hpp"
#include "ncop/operad.hpp"
#include "ncop/rewrite.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ncop {

namespace {

Int as_int(const Rat& c) {
  if (boost::multiprecision::denominator(c) != 1)
    throw std::logic_error("expected an integer coefficient, got " + to_string(c));
  return boost::multiprecision::numerator(c);
}

const NCPartition& base_partition(Op op) {
  static const NCPartition m = gen_mul();
  static const NCPartition t = gen_tri();
  static const NCPartition tt = gen_ttri();
  switch (op) {
    case Op::Mul: return m;
    case Op::Tri: return t;
    default: return tt;
  }
}

}  // namespace

const QFormalSum& psi_image(Op op) {
  static const QFormalSum m = QFormalSum::of(gen_mul());
  static const QFormalSum t = QFormalSum::of(gen_tri(), Rat(-1));
  static const QFormalSum tt = QFormalSum::of(gen_ttri(), Rat(-1));
  switch (op) {
    case Op::Mul: return m;
    case Op::Tri: return t;
    default: return tt;
  }
}

const QFormalSum& free_image(Op op) {
  static const QFormalSum m = QFormalSum::of(gen_mul());
  static const QFormalSum t = QFormalSum::of(gen_tri());
  static const QFormalSum tt = QFormalSum::of(gen_ttri());
  switch (op) {
    case Op::Mul: return m;
    case Op::Tri: return t;
    default: return tt;
  }
}

QFormalSum eval_with_images(const Term& t, const QFormalSum& mul_img, const QFormalSum& tri_img,
                            const QFormalSum& ttri_img) {
  if (t->is_leaf()) return QFormalSum::of(unit_partition());
  const QFormalSum* img = &mul_img;
  if (t->op() == Op::Tri) img = &tri_img;
  if (t->op() == Op::Ttri) img = &ttri_img;
  QFormalSum r = *img;
  const auto& kids = t->kids();
  // substitute children from the last slot backwards so earlier slot indices
  // are unaffected by the arity growth
  for (int s = static_cast<int>(kids.size()); s >= 1; --s) {
    const Term& kid = kids[s - 1];
    if (kid->is_leaf()) continue;
    r = compose(r, s, eval_with_images(kid, mul_img, tri_img, ttri_img));
  }
  return r;
}

QFormalSum eval_psi(const Term& t) {
  return eval_with_images(t, psi_image(Op::Mul), psi_image(Op::Tri), psi_image(Op::Ttri));
}

QFormalSum eval_free(const Term& t) {
  return eval_with_images(t, free_image(Op::Mul), free_image(Op::Tri), free_image(Op::Ttri));
}

namespace {

QFormalSum eval_sum(const TermSum& s, QFormalSum (*ev)(const Term&)) {
  QFormalSum r(s.arity());
  for (const auto& [t, c] : s.terms()) {
    const QFormalSum img = ev(t);
    for (const auto& [pi, cc] : img.terms()) r.add(pi, c * cc);
  }
  return r;
}

}  // namespace

QFormalSum eval_psi(const TermSum& s) { return eval_sum(s, static_cast<QFormalSum (*)(const Term&)>(eval_psi)); }

QFormalSum eval_free(const TermSum& s) {
  return eval_sum(s, static_cast<QFormalSum (*)(const Term&)>(eval_free));
}

NCPartition gr_eval_free(const Term& t) {
  if (t->is_leaf()) return unit_partition();
  NCPartition r = base_partition(t->op());
  const auto& kids = t->kids();
  for (int s = static_cast<int>(kids.size()); s >= 1; --s) {
    if (kids[s - 1]->is_leaf()) continue;
    r = gr_compose_basis(r, s, gr_eval_free(kids[s - 1]));
  }
  return r;
}

int bracket_count(const Term& t) {
  if (t->is_leaf()) return 0;
  int c = t->op() == Op::Mul ? 0 : 1;
  for (const Term& k : t->kids()) c += bracket_count(k);
  return c;
}

bool RelationReport::ok() const {
  auto all = [](const std::vector<RelationCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const RelationCheck& c) { return c.ok; });
  };
  return all(relations) && all(identities) && all(rules);
}

nlohmann::json RelationReport::to_json() const {
  auto arr = [](const std::vector<RelationCheck>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v) {
      nlohmann::json o{{"id", c.id}, {"ok", c.ok}};
      if (!c.detail.empty()) o["detail"] = c.detail;
      a.push_back(std::move(o));
    }
    return a;
  };
  return nlohmann::json{{"relations", arr(relations)},
                        {"identities", arr(identities)},
                        {"rules", arr(rules)},
                        {"ok", ok()}};
}

RelationReport verify_relations() {
  RelationReport rep;

  struct RelDef {
    const char* id;
    const char* expr;  // must evaluate to zero
  };
  static const RelDef kRelations[] = {
      {"rel1", "(mul (mul a b) c) - (mul a (mul b c)) + (tri a b c) - (ttri a b c)"},
      {"rel2", "(tri (mul a b) c d) - (tri a (mul b c) d)"},
      {"rel3", "(tri a b (mul c d)) - (mul (tri a b c) d)"},
      {"rel4", "(ttri (mul a b) c d) - (mul a (ttri b c d))"},
      {"rel5", "(ttri a (mul b c) d) - (ttri a b (mul c d))"},
      {"rel6", "(mul a (tri b c d)) - (mul (ttri a b c) d)"},
      {"rel7a", "(tri (tri a b c) d e) - (tri a (ttri b c d) e)"},
      {"rel7b", "(tri a (ttri b c d) e) - (tri a b (tri c d e))"},
      {"rel8", "(tri a (tri b c d) e) - (tri (ttri a b c) d e)"},
      {"rel9a", "(ttri (ttri a b c) d e) - (ttri a (tri b c d) e)"},
      {"rel9b", "(ttri a (tri b c d) e) - (ttri a b (ttri c d e))"},
      {"rel10", "(ttri a (ttri b c d) e) - (ttri a b (tri c d e))"},
      {"rel11", "(tri a b (ttri c d e)) - (ttri (tri a b c) d e)"},
  };
  for (const RelDef& rd : kRelations) {
    RelationCheck c;
    c.id = rd.id;
    QFormalSum v = eval_psi(TermSum::parse(rd.expr));
    c.ok = v.is_zero();
    if (!c.ok) c.detail = std::string(rd.expr) + " evaluates to " + v.str();
    rep.relations.push_back(std::move(c));
  }

  struct Side {
    const char* a;
    int slot;
    const char* b;
  };
  struct IdDef {
    std::vector<Side> sides;  // all sides must land on the same basis element
    const char* expected;
  };
  static const std::vector<IdDef> kIdentities = {
      {{{"tri", 1, "mul"}, {"tri", 2, "mul"}}, "{0,4}|{1,2,3}"},
      {{{"mul", 1, "tri"}, {"tri", 3, "mul"}}, "{0,3,4}|{1,2}"},
      {{{"mul", 2, "ttri"}, {"ttri", 1, "mul"}}, "{0,1,2}|{3,4}"},
      {{{"ttri", 2, "mul"}, {"ttri", 3, "mul"}}, "{0,1}|{2,3,4}"},
      {{{"mul", 1, "ttri"}, {"mul", 2, "tri"}}, "{0,1,4}|{2,3}"},
      {{{"tri", 1, "tri"}, {"tri", 2, "ttri"}, {"tri", 3, "tri"}}, "{0,5}|{1,2}|{3,4}"},
      {{{"tri", 2, "tri"}, {"tri", 1, "ttri"}}, "{0,5}|{1,4}|{2,3}"},
      {{{"ttri", 1, "ttri"}, {"ttri", 2, "tri"}, {"ttri", 3, "ttri"}}, "{0,1}|{2,3}|{4,5}"},
      {{{"ttri", 2, "ttri"}, {"ttri", 3, "tri"}}, "{0,1}|{2,5}|{3,4}"},
      {{{"tri", 3, "ttri"}, {"ttri", 1, "tri"}}, "{0,3}|{1,2}|{4,5}"},
  };
  auto gen = [](const std::string& name) {
    if (name == "mul") return gen_mul();
    if (name == "tri") return gen_tri();
    return gen_ttri();
  };
  for (const IdDef& idf : kIdentities) {
    RelationCheck c;
    std::string label;
    bool ok = true;
    std::string detail;
    for (std::size_t s = 0; s < idf.sides.size(); ++s) {
      const Side& sd = idf.sides[s];
      if (s) label += " = ";
      label += std::string(sd.a) + " o" + std::to_string(sd.slot) + " " + sd.b;
      FormalSum v = compose_basis(gen(sd.a), sd.slot, gen(sd.b));
      bool side_ok = v.terms().size() == 1 && v.terms().begin()->second == 1 &&
                     v.terms().begin()->first.str() == idf.expected;
      if (!side_ok) {
        ok = false;
        if (detail.empty()) detail = "got " + v.str() + ", want +1*" + idf.expected;
      }
    }
    c.id = std::move(label);
    c.ok = ok;
    c.detail = std::move(detail);
    rep.identities.push_back(std::move(c));
  }

  // every rewrite rule must be a consequence of the relations
  for (const RewriteRule& r : rules()) {
    RelationCheck c;
    c.id = r.id;
    QFormalSum v = eval_psi(TermSum::of(r.lhs) - r.rhs);
    c.ok = v.is_zero();
    if (!c.ok) c.detail = "lhs - rhs evaluates to " + v.str();
    rep.rules.push_back(std::move(c));
  }
  return rep;
}

nlohmann::json RankReport::to_json() const {
  return nlohmann::json{{"arity", arity},
                        {"normal_monomials", normal_count},
                        {"rank", rank},
                        {"expected", to_string(expected)},
                        {"pass", pass}};
}

RankReport rank_check(int n) {
  RankReport rep;
  rep.arity = n;
  const std::vector<Term> normal = enumerate_normal(n);
  const std::vector<NCPartition> basis = enumerate(n);
  rep.normal_count = normal.size();
  rep.expected = count(n);

  std::map<std::string, std::size_t> col;
  for (std::size_t j = 0; j < basis.size(); ++j) col[basis[j].str()] = j;
  IntMatrix m(normal.size(), basis.size());
  for (std::size_t r = 0; r < normal.size(); ++r) {
    const QFormalSum img = eval_psi(normal[r]);
    for (const auto& [pi, c] : img.terms()) m.at(r, col.at(pi.str())) = as_int(c);
  }
  rep.rank = bareiss_rank(std::move(m));
  rep.pass = rep.rank == rep.normal_count && Int(rep.normal_count) == rep.expected;
  return rep;
}

namespace {

TermSum graft_sum(const TermSum& outer, int leaf_pos, const TermSum& inner) {
  TermSum r(outer.arity() + inner.arity() - 1);
  for (const auto& [t, c] : outer.terms())
    for (const auto& [s, d] : inner.terms()) r.add(graft(t, leaf_pos, s), c * d);
  return r;
}

}  // namespace

TermSum factorize(const NCPartition& pi) {
  const int n = pi.arity();
  if (pi.blocks_count() == 1) {
    if (n == 1) return TermSum::of(leaf());
    if (n == 2) return TermSum::of(t_mul(leaf(), leaf()));
    // peel one element off the full block; the correction is the cut part of
    // the composition that rebuilds it
    TermSum grafted = graft_sum(factorize(one_block(n - 1)), 1, TermSum::of(t_mul(leaf(), leaf())));
    std::vector<std::vector<int>> raw = {{0}, {1, 2}};
    for (int e = 3; e <= n; ++e) raw[0].push_back(e);
    return grafted - factorize(NCPartition::validate(n, raw));
  }

  const std::vector<int> b = consecutive_block(pi);
  const int i = b.front(), j = b.back();
  const int len = static_cast<int>(b.size());
  if (len >= 3) {
    // collapse the block to a pair, then regrow it with a full corolla
    std::vector<std::vector<int>> raw;
    for (const auto& blk : pi.blocks()) {
      if (blk == b) {
        raw.push_back({i, i + 1});
        continue;
      }
      std::vector<int> nb;
      for (int e : blk) nb.push_back(e > j ? e - (len - 2) : e);
      raw.push_back(std::move(nb));
    }
    NCPartition nu = NCPartition::validate(n - (len - 2), raw);
    return graft_sum(factorize(nu), i + 1, factorize(one_block(len - 1)));
  }

  // a pair block comes from one of the two bracket generators
  std::vector<std::vector<int>> raw;
  for (const auto& blk : pi.blocks()) {
    if (blk == b) continue;
    std::vector<int> nb;
    for (int e : blk) nb.push_back(e > i + 1 ? e - 2 : e);
    raw.push_back(std::move(nb));
  }
  NCPartition nu = NCPartition::validate(n - 2, raw);
  if (i <= n - 2) return graft_sum(factorize(nu), i, TermSum::of(t_tri(leaf(), leaf(), leaf())));
  return graft_sum(factorize(nu), n - 2, TermSum::of(t_ttri(leaf(), leaf(), leaf())));
}

nlohmann::json KernelReport::to_json() const {
  nlohmann::json vecs = nlohmann::json::array();
  for (const TermSum& s : basis) vecs.push_back(s.str());
  return nlohmann::json{{"arity", arity},
                        {"monomials", monomial_count},
                        {"dim", dim},
                        {"basis", std::move(vecs)},
                        {"verified", verified}};
}

namespace {

void normalize_primitive(TermSum& s) {
  if (s.terms().empty()) return;
  Int l = 1;
  for (const auto& [t, c] : s.terms())
    l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(c)));
  TermSum scaled(s.arity());
  Int g = 0;
  for (const auto& [t, c] : s.terms()) {
    Rat v = c * Rat(l);
    scaled.add(t, v);
    g = boost::multiprecision::gcd(g, Int(boost::multiprecision::numerator(v)));
  }
  if (g == 0) {
    s = std::move(scaled);
    return;
  }
  if (scaled.terms().begin()->second < 0) g = -g;  // leading coefficient positive
  TermSum out(s.arity());
  for (const auto& [t, c] : scaled.terms()) out.add(t, c / Rat(g));
  s = std::move(out);
}

}  // namespace

KernelReport binary_kernel(int n) {
  KernelReport rep;
  rep.arity = n;
  const std::vector<Term> mons = enumerate_all(n, Signature::Binary);
  const std::vector<NCPartition> basis = enumerate(n);
  rep.monomial_count = mons.size();

  std::map<std::string, std::size_t> row;
  for (std::size_t j = 0; j < basis.size(); ++j) row[basis[j].str()] = j;
  RatMatrix m(basis.size(), mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    const QFormalSum img = eval_psi(mons[c]);
    for (const auto& [pi, coeff] : img.terms()) m.at(row.at(pi.str()), c) = coeff;
  }

  rep.verified = true;
  for (const std::vector<Rat>& v : nullspace(std::move(m))) {
    TermSum s(n);
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (v[c] != 0) s.add(mons[c], v[c]);
    normalize_primitive(s);
    if (!eval_psi(s).is_zero()) rep.verified = false;
    rep.basis.push_back(std::move(s));
  }
  rep.dim = rep.basis.size();
  return rep;
}

nlohmann::json FiltrationReport::to_json() const {
  nlohmann::json o{{"arity", arity},           {"weight", weight},
                   {"inclusion_ok", inclusion_ok}, {"leading_ok", leading_ok},
                   {"span_checked", span_checked}, {"ok", ok()}};
  if (span_checked) {
    o["span_rank"] = span_rank;
    o["span_expected"] = to_string(span_expected);
    o["span_ok"] = span_ok;
  }
  if (!detail.empty()) o["detail"] = detail;
  return o;
}

FiltrationReport filtration_check(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("weight must lie in [0, arity-1]");
  FiltrationReport rep;
  rep.arity = n;
  rep.weight = k;
  rep.inclusion_ok = true;
  rep.leading_ok = true;
  const int min_blocks = n - k;

  for (const Term& t : enumerate_normal(n)) {
    if (t->weight() > k) continue;
    QFormalSum img = eval_psi(t);
    for (const auto& [pi, c] : img.terms())
      if (pi.blocks_count() < min_blocks) {
        rep.inclusion_ok = false;
        if (rep.detail.empty()) rep.detail = print_term(t) + " reaches " + pi.str();
      }
    if (t->weight() != k) continue;
    const NCPartition lead = gr_eval_free(t);
    const Rat sign = bracket_count(t) % 2 ? Rat(-1) : Rat(1);
    std::size_t at_level = 0;
    bool lead_found = false;
    for (const auto& [pi, c] : img.terms())
      if (pi.blocks_count() == min_blocks) {
        ++at_level;
        if (pi == lead && c == sign) lead_found = true;
      }
    if (at_level != 1 || !lead_found) {
      rep.leading_ok = false;
      if (rep.detail.empty()) rep.detail = "leading term mismatch at " + print_term(t);
    }
  }

  rep.span_checked = n <= 6;
  if (rep.span_checked) {
    const std::vector<NCPartition> basis = enumerate(n);
    std::map<std::string, std::size_t> col;
    for (std::size_t j = 0; j < basis.size(); ++j) col[basis[j].str()] = j;
    std::vector<Term> mons;
    for (const Term& t : enumerate_all(n, Signature::Full))
      if (t->weight() <= k) mons.push_back(t);
    IntMatrix m(mons.size(), basis.size());
    for (std::size_t r = 0; r < mons.size(); ++r) {
      const QFormalSum img = eval_psi(mons[r]);
      for (const auto& [pi, c] : img.terms()) m.at(r, col.at(pi.str())) = as_int(c);
    }
    rep.span_rank = bareiss_rank(std::move(m));
    rep.span_expected = 0;
    for (const auto& [blocks, cnt] : count_by_blocks(n))
      if (blocks >= min_blocks) rep.span_expected += cnt;
    rep.span_ok = Int(rep.span_rank) == rep.span_expected;
  }
  return rep;
}

}  // namespace ncop
