#include "doctest.h"

#include "ncop/errors.hpp"
#include "ncop/term.hpp"

#include <string>
#include <vector>

using namespace ncop;

TEST_CASE("term construction and measures") {
  const Term t = parse_term("(mul (mul a b) (mul c d))");
  CHECK(t->arity() == 4);
  CHECK(t->weight() == 3);
  CHECK(!t->is_leaf());
  CHECK(t->op() == Op::Mul);
  CHECK(leaf()->arity() == 1);
  CHECK(leaf()->weight() == 0);
  CHECK(t_tri(leaf(), leaf(), leaf())->weight() == 1);
  CHECK(op_slots(Op::Mul) == 2);
  CHECK(op_slots(Op::Tri) == 3);
  CHECK(op_slots(Op::Ttri) == 3);
}

TEST_CASE("print and parse round-trip") {
  const std::vector<std::string> fixtures = {
      "a",
      "(mul a b)",
      "(tri a b c)",
      "(ttri a b c)",
      "(mul (mul a b) c)",
      "(mul a (tri b c d))",
      "(tri (ttri a b c) d (mul e f))",
      "(ttri a (mul b (mul c d)) (tri e f g))",
  };
  for (const std::string& s : fixtures) {
    const Term t = parse_term(s);
    CHECK(print_term(t) == s);
    CHECK(structurally_equal(parse_term(print_term(t)), t));
  }
}

TEST_CASE("parse rejects malformed input with positions") {
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("(mul a)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(mul a b c)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(tri a b)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(mul a b"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(frob a b)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(mul b a)"), SyntaxError);  // leaves must read a,b,...
  try {
    parse_term("(mul b a)");
  } catch (const SyntaxError& e) {
    CHECK(e.pos > 0);
  }
}

TEST_CASE("monomial order") {
  // weight dominates
  CHECK(cmp_terms(parse_term("(mul a (mul b c))"), parse_term("(tri a b c)")) > 0);
  CHECK(cmp_terms(parse_term("(mul (mul a b) c)"), parse_term("(ttri a b c)")) > 0);
  // ties read leaf words from the right; the deeper rightmost leaf wins
  CHECK(cmp_terms(parse_term("(tri a (mul b c) d)"), parse_term("(tri (mul a b) c d)")) > 0);
  CHECK(cmp_terms(parse_term("(mul a (mul b (mul c d)))"),
                  parse_term("(mul (mul (mul a b) c) d)")) > 0);
  CHECK(cmp_terms(parse_term("(mul (mul a (mul b c)) d)"),
                  parse_term("(mul (tri a b c) d)")) > 0);
  // arity-3 chain, descending
  CHECK(cmp_terms(parse_term("(mul a (mul b c))"), parse_term("(mul (mul a b) c)")) > 0);
  CHECK(cmp_terms(parse_term("(ttri a b c)"), parse_term("(tri a b c)")) > 0);

  const Term u = parse_term("(mul (mul a b) c)");
  CHECK(cmp_terms(u, u) == 0);
  CHECK(cmp_terms(parse_term("(mul (mul a b) c)"), parse_term("(mul a (mul b c))")) < 0);
  CHECK_THROWS_AS(cmp_terms(parse_term("(mul a b)"), parse_term("(tri a b c)")),
                  ArityMismatch);

  // antisymmetry and transitivity over all reduced arity-4 monomials
  std::vector<Term> ts;
  for (const std::string& s : {"(mul (mul (mul a b) c) d)", "(mul (mul a (mul b c)) d)",
                               "(mul (mul a b) (mul c d))", "(mul a (mul (mul b c) d))",
                               "(mul a (mul b (mul c d)))", "(tri (mul a b) c d)",
                               "(tri a (mul b c) d)", "(tri a b (mul c d))",
                               "(mul (tri a b c) d)", "(mul a (tri b c d))"})
    ts.push_back(parse_term(s));
  for (const Term& x : ts)
    for (const Term& y : ts) {
      CHECK(cmp_terms(x, y) == -cmp_terms(y, x));
      for (const Term& z : ts)
        if (cmp_terms(x, y) > 0 && cmp_terms(y, z) > 0) CHECK(cmp_terms(x, z) > 0);
    }
}

TEST_CASE("structural predicates") {
  CHECK(structurally_equal(parse_term("(mul a b)"), parse_term("(mul a b)")));
  CHECK(!structurally_equal(parse_term("(mul (mul a b) c)"), parse_term("(mul a (mul b c))")));
  CHECK(contains_ttri(parse_term("(mul a (ttri b c d))")));
  CHECK(contains_ttri(parse_term("(ttri a b c)")));
  CHECK(!contains_ttri(parse_term("(mul a (tri b c d))")));
  CHECK(!contains_ttri(leaf()));
}

TEST_CASE("graft substitutes at a leaf position") {
  const Term host = parse_term("(mul a (tri b c d))");
  CHECK(print_term(graft(host, 1, parse_term("(mul a b)"))) ==
        "(mul (mul a b) (tri c d e))");
  CHECK(print_term(graft(host, 3, parse_term("(mul a b)"))) ==
        "(mul a (tri b (mul c d) e))");
  CHECK(print_term(graft(host, 4, leaf())) == "(mul a (tri b c d))");
  CHECK_THROWS_AS(graft(host, 0, leaf()), IndexOutOfRange);
  CHECK_THROWS_AS(graft(host, 5, leaf()), IndexOutOfRange);
}

TEST_CASE("term sums") {
  TermSum s(2);
  s.add(parse_term("(mul a b)"), Rat(3, 2));
  CHECK(s.str() == "3/2*(mul a b)");
  TermSum u = TermSum::of(parse_term("(mul (mul a b) c)")) -
              TermSum::of(parse_term("(tri a b c)"), Rat(1));
  CHECK(u.str() == "1*(mul (mul a b) c) - 1*(tri a b c)");
  CHECK(TermSum::parse(u.str()) == u);
  CHECK(TermSum::parse("3/2*(mul a b)").str() == "3/2*(mul a b)");
  CHECK(TermSum::parse("(mul a b)").str() == "1*(mul a b)");  // bare term, coefficient 1

  // leading term is the largest monomial
  TermSum v = TermSum::of(parse_term("(tri a b c)")) +
              TermSum::of(parse_term("(mul a (mul b c))"));
  CHECK(v.terms().begin()->first->op() == Op::Mul);
  CHECK(v.str() == "1*(mul a (mul b c)) + 1*(tri a b c)");

  // cancellation
  TermSum w = u - u;
  CHECK(w.is_zero());
  CHECK(w.str() == "0");
  CHECK((Rat(0) * u).is_zero());
  CHECK((Rat(2) * u) + (Rat(-2) * u) == TermSum(3));

  CHECK_THROWS_AS(u.add(parse_term("(mul a b)"), Rat(1)), ArityMismatch);
  CHECK_THROWS_AS(u += TermSum::of(parse_term("(mul a b)")), ArityMismatch);
}
