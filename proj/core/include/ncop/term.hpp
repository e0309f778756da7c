#pragma once

#include "ncop/errors.hpp"
#include "ncop/numbers.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ncop {

// internal node labels of a planar monomial; mul is binary, tri (single
// bracket) and ttri (double bracket) are ternary
enum class Op : unsigned char { Mul, Tri, Ttri };

inline int op_slots(Op op) { return op == Op::Mul ? 2 : 3; }
inline const char* op_name(Op op) {
  switch (op) {
    case Op::Mul: return "mul";
    case Op::Tri: return "tri";
    default: return "ttri";
  }
}

class TermNode;
// immutable shared tree; leaves are positional (no stored names)
using Term = std::shared_ptr<const TermNode>;

class TermNode {
 public:
  bool is_leaf() const { return kids_.empty(); }
  Op op() const { return op_; }
  const std::vector<Term>& kids() const { return kids_; }
  int arity() const { return arity_; }    // leaf count
  int weight() const { return weight_; }  // internal node count

  static Term leaf();
  static Term node(Op op, std::vector<Term> kids);

 private:
  TermNode() : arity_(1), weight_(0) {}
  TermNode(Op op, std::vector<Term> kids);
  Op op_ = Op::Mul;
  std::vector<Term> kids_;
  int arity_;
  int weight_;
};

inline Term leaf() { return TermNode::leaf(); }
inline Term t_mul(Term a, Term b) { return TermNode::node(Op::Mul, {std::move(a), std::move(b)}); }
inline Term t_tri(Term a, Term b, Term c) {
  return TermNode::node(Op::Tri, {std::move(a), std::move(b), std::move(c)});
}
inline Term t_ttri(Term a, Term b, Term c) {
  return TermNode::node(Op::Ttri, {std::move(a), std::move(b), std::move(c)});
}

// Total order on monomials of equal arity: first by weight; ties compare the
// root-to-leaf label words leaf by leaf starting from the RIGHTMOST leaf; at
// the first leaf whose words differ, the longer word wins, and equal lengths
// compare lexicographically with mul < tri < ttri.  Returns -1, 0, +1.
int cmp_terms(const Term& u, const Term& v);

bool structurally_equal(const Term& u, const Term& v);
bool contains_ttri(const Term& t);

// "(mul a (tri b c d))"; leaves are named a,b,c,... left to right
std::string print_term(const Term& t);
// inverse of print_term; leaf names must read a,b,c,... left to right
Term parse_term(const std::string& text);

// substitute s at the leaf in position `leaf_pos` (1-based, left to right)
Term graft(const Term& t, int leaf_pos, const Term& s);

// Rational combination of monomials of one fixed arity.  Terms are kept in
// DESCENDING monomial order, so begin() is the leading term.
class TermSum {
 public:
  struct DescCmp {
    bool operator()(const Term& a, const Term& b) const { return cmp_terms(a, b) > 0; }
  };
  using Map = std::map<Term, Rat, DescCmp>;

  explicit TermSum(int arity) : arity_(arity) {}
  static TermSum of(const Term& t, Rat coeff = Rat(1)) {
    TermSum s(t->arity());
    s.add(t, coeff);
    return s;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  void add(const Term& t, const Rat& c);
  TermSum& operator+=(const TermSum& o);
  TermSum& operator-=(const TermSum& o);
  TermSum& operator*=(const Rat& k);
  friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
  friend TermSum operator-(TermSum a, const TermSum& b) { return a -= b; }
  friend TermSum operator*(const Rat& k, TermSum a) { return a *= k; }
  friend TermSum operator-(const TermSum& a) {
    TermSum r(a.arity_);
    for (const auto& [t, c] : a.terms_) r.add(t, -c);
    return r;
  }
  friend bool operator==(const TermSum& a, const TermSum& b);
  friend bool operator!=(const TermSum& a, const TermSum& b) { return !(a == b); }

  // "3/2*(mul a b) - 1*(tri a b c)": leading term first, then signed tail
  std::string str() const;
  nlohmann::json to_json() const;

  // parses the str() format; a bare s-expression counts as coefficient 1;
  // the arity is inferred from the first term
  static TermSum parse(const std::string& text);

 private:
  int arity_;
  Map terms_;
};

}  // namespace ncop
