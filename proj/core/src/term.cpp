#include "ncop/term.hpp"

#include <nlohmann/json.hpp>

#include <cassert>
#include <cctype>

namespace ncop {

TermNode::TermNode(Op op, std::vector<Term> kids) : op_(op), kids_(std::move(kids)) {
  assert(static_cast<int>(kids_.size()) == op_slots(op));
  arity_ = 0;
  weight_ = 1;
  for (const auto& k : kids_) {
    arity_ += k->arity();
    weight_ += k->weight();
  }
}

Term TermNode::leaf() {
  // one shared leaf is enough: nodes are immutable and leaves are positional
  static const Term the_leaf(new TermNode());
  return the_leaf;
}

Term TermNode::node(Op op, std::vector<Term> kids) {
  return Term(new TermNode(op, std::move(kids)));
}

namespace {

// root-to-leaf label words, one per leaf, left to right; labels are the
// characters '0' (mul), '1' (tri), '2' (ttri) so byte order matches the
// generator order
void path_words(const Term& t, std::string& prefix, std::vector<std::string>& out) {
  if (t->is_leaf()) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back(static_cast<char>('0' + static_cast<int>(t->op())));
  for (const auto& k : t->kids()) path_words(k, prefix, out);
  prefix.pop_back();
}

std::vector<std::string> path_words(const Term& t) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(t->arity()));
  std::string prefix;
  path_words(t, prefix, out);
  return out;
}

}  // namespace

int cmp_terms(const Term& u, const Term& v) {
  if (u->arity() != v->arity())
    throw ArityMismatch("comparing monomials of arity " + std::to_string(u->arity()) + " and " +
                        std::to_string(v->arity()));
  if (u->weight() != v->weight()) return u->weight() < v->weight() ? -1 : 1;
  const auto wu = path_words(u), wv = path_words(v);
  for (std::size_t r = wu.size(); r-- > 0;) {
    if (wu[r].size() != wv[r].size()) return wu[r].size() < wv[r].size() ? -1 : 1;
    if (wu[r] != wv[r]) return wu[r] < wv[r] ? -1 : 1;
  }
  return 0;  // equal path sequences determine the planar tree
}

bool structurally_equal(const Term& u, const Term& v) {
  if (u.get() == v.get()) return true;
  if (u->is_leaf() != v->is_leaf()) return false;
  if (u->is_leaf()) return true;
  if (u->op() != v->op()) return false;
  for (std::size_t k = 0; k < u->kids().size(); ++k)
    if (!structurally_equal(u->kids()[k], v->kids()[k])) return false;
  return true;
}

bool contains_ttri(const Term& t) {
  if (t->is_leaf()) return false;
  if (t->op() == Op::Ttri) return true;
  for (const auto& k : t->kids())
    if (contains_ttri(k)) return true;
  return false;
}

namespace {

void print_rec(const Term& t, std::string& out, int& next_leaf) {
  if (t->is_leaf()) {
    out.push_back(static_cast<char>('a' + next_leaf++));
    return;
  }
  out.push_back('(');
  out += op_name(t->op());
  for (const auto& k : t->kids()) {
    out.push_back(' ');
    print_rec(k, out, next_leaf);
  }
  out.push_back(')');
}

}  // namespace

std::string print_term(const Term& t) {
  if (t->arity() > 26) throw ArityMismatch("cannot name more than 26 leaves");
  std::string out;
  int next_leaf = 0;
  print_rec(t, out, next_leaf);
  return out;
}

namespace {

struct TermParser {
  const std::string& s;
  std::size_t pos = 0;
  int next_leaf = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  Term parse_expr() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError("unexpected end of term", pos);
    if (s[pos] == '(') {
      ++pos;
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string name = s.substr(start, pos - start);
      Op op;
      if (name == "mul")
        op = Op::Mul;
      else if (name == "tri")
        op = Op::Tri;
      else if (name == "ttri")
        op = Op::Ttri;
      else
        throw SyntaxError("expected mul, tri or ttri", start);
      std::vector<Term> kids;
      for (int k = 0; k < op_slots(op); ++k) kids.push_back(parse_expr());
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') throw SyntaxError("expected ')'", pos);
      ++pos;
      return TermNode::node(op, std::move(kids));
    }
    if (std::islower(static_cast<unsigned char>(s[pos]))) {
      if (next_leaf >= 26) throw SyntaxError("more than 26 leaves", pos);
      char expected = static_cast<char>('a' + next_leaf);
      if (s[pos] != expected)
        throw SyntaxError(std::string("leaves must read a,b,c,... left to right; expected '") +
                              expected + "'",
                          pos);
      ++next_leaf;
      ++pos;
      if (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
        throw SyntaxError("leaf names are single letters", pos);
      return TermNode::leaf();
    }
    throw SyntaxError("expected '(' or a leaf letter", pos);
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  TermParser p{text};
  Term t = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
  return t;
}

namespace {

Term graft_rec(const Term& t, int& countdown, const Term& s) {
  if (t->is_leaf()) return --countdown == 0 ? s : t;
  if (countdown > t->arity()) {  // subtree entirely left of the target
    countdown -= t->arity();
    return t;
  }
  std::vector<Term> kids;
  kids.reserve(t->kids().size());
  bool done = false;
  for (const auto& k : t->kids()) {
    if (done || countdown > k->arity()) {
      if (!done) countdown -= k->arity();
      kids.push_back(k);
    } else {
      kids.push_back(graft_rec(k, countdown, s));
      done = true;
    }
  }
  return TermNode::node(t->op(), std::move(kids));
}

}  // namespace

Term graft(const Term& t, int leaf_pos, const Term& s) {
  if (leaf_pos < 1 || leaf_pos > t->arity())
    throw IndexOutOfRange("leaf " + std::to_string(leaf_pos) + " in arity " +
                          std::to_string(t->arity()));
  int countdown = leaf_pos;
  return graft_rec(t, countdown, s);
}

void TermSum::add(const Term& t, const Rat& c) {
  if (t->arity() != arity_)
    throw ArityMismatch("term of arity " + std::to_string(t->arity()) + " in a sum of arity " +
                        std::to_string(arity_));
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TermSum& TermSum::operator+=(const TermSum& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}
TermSum& TermSum::operator-=(const TermSum& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}
TermSum& TermSum::operator*=(const Rat& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [t, c] : terms_) c *= k;
  }
  return *this;
}

bool operator==(const TermSum& a, const TermSum& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->second != ib->second || cmp_terms(ia->first, ib->first) != 0) return false;
  return true;
}

std::string TermSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += to_string(a);
    out += '*';
    out += print_term(t);
  }
  return out;
}

nlohmann::json TermSum::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : terms_)
    terms.push_back({{"coeff", to_string(c)}, {"term", print_term(t)}});
  return {{"arity", arity_}, {"terms", terms}};
}

TermSum TermSum::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw SyntaxError("empty sum", pos);
  TermSum out(1);
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw SyntaxError("expected '+' or '-'", pos);
    }
    Rat coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      try {
        coeff = Rat(text.substr(start, pos - start));
      } catch (const std::exception&) {
        throw SyntaxError("bad coefficient", start);
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') throw SyntaxError("expected '*'", pos);
      ++pos;
      skip_ws();
    }
    // the term itself: either (...) or a single leaf letter
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '(') {
      int depth = 0;
      while (pos < text.size()) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')' && --depth == 0) { ++pos; break; }
        ++pos;
      }
      if (depth != 0) throw SyntaxError("unbalanced parentheses", start);
    } else if (pos < text.size() && std::islower(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    } else {
      throw SyntaxError("expected a term", pos);
    }
    Term t;
    try {
      t = parse_term(text.substr(start, pos - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError("bad term starting here: " + std::string(e.what()), start);
    }
    if (first) {
      out = TermSum(t->arity());
      first = false;
    }
    out.add(t, sign < 0 ? Rat(-coeff) : coeff);
    skip_ws();
  }
  return out;
}

}  // namespace ncop
