#include "doctest.h"

#include "ncop/partition.hpp"
#include "ncop/rewrite.hpp"
#include "ncop/term.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ncop;

TEST_CASE("the six oriented rules") {
  const auto& rs = rules();
  REQUIRE(rs.size() == 6);
  for (std::size_t i = 0; i < rs.size(); ++i)
    CHECK(rs[i].id == "rule" + std::to_string(i + 1));
  for (const auto& r : rs) {
    CHECK(!contains_ttri(r.lhs));
    for (const auto& [m, c] : r.rhs.terms()) {
      CHECK(!contains_ttri(m));
      CHECK(c != 0);
      CHECK(cmp_terms(r.lhs, m) > 0);  // every rule rewrites strictly downward
    }
  }
}

TEST_CASE("is_normal recognizes the forbidden patterns") {
  const char* reducible[] = {
      "(tri a (mul b c) d)",          "(tri a b (mul c d))",
      "(tri a b (tri c d e))",        "(mul (mul a (mul b c)) d)",
      "(tri (mul a (mul b c)) d e)",  "(mul a (mul b (mul c d)))",
      "(mul (tri a (mul b c) d) e)",  // pattern inside a subtree
      "(tri a b (mul (mul c d) e))",
  };
  for (const char* s : reducible) CHECK(!is_normal(parse_term(s)));

  const char* normal[] = {
      "a",
      "(mul a b)",
      "(tri a b c)",
      "(mul (mul a b) c)",
      "(mul a (mul b c))",
      "(mul (mul (mul a b) c) d)",
      "(mul (mul a b) (mul c d))",
      "(mul a (mul (mul b c) d))",
      "(tri (mul a b) c d)",
      "(mul (tri a b c) d)",
      "(mul a (tri b c d))",
      "(tri (tri a b c) d e)",
      "(tri (mul (mul a b) c) d e)",
  };
  for (const char* s : normal) CHECK(is_normal(parse_term(s)));
}

TEST_CASE("normal form golden values") {
  CHECK(normal_form(parse_term("(tri a (mul b c) d)")).str() == "1*(tri (mul a b) c d)");
  CHECK(normal_form(parse_term("(mul a (mul b (mul c d)))")).str() ==
        "1*(mul a (mul (mul b c) d)) + 1*(mul (mul a b) (mul c d)) "
        "- 1*(mul (mul (mul a b) c) d) + 1*(mul a (tri b c d)) - 1*(tri (mul a b) c d)");
  CHECK(normal_form(parse_term("(tri a b (mul c d))")).str() == "1*(mul (tri a b c) d)");
}

TEST_CASE("normal monomials are fixed points") {
  for (int n = 1; n <= 6; ++n)
    for (const Term& t : enumerate_normal(n)) {
      CHECK(is_normal(t));
      CHECK(normal_form(t) == TermSum::of(t));
    }
}

TEST_CASE("normal form is linear") {
  const Term t1 = parse_term("(mul a (mul b (mul c d)))");
  const Term t2 = parse_term("(tri a (mul b c) d)");
  const TermSum s = Rat(2) * TermSum::of(t1) - Rat(3, 2) * TermSum::of(t2);
  CHECK(normal_form(s) == Rat(2) * normal_form(t1) - Rat(3, 2) * normal_form(t2));
  CHECK(normal_form(TermSum(4)).is_zero());
  CHECK(normal_form(TermSum::of(t1) - TermSum::of(t1)).is_zero());
}

TEST_CASE("normal form rejects the double bracket") {
  CHECK_THROWS_AS(normal_form(parse_term("(ttri a b c)")), std::invalid_argument);
  CHECK_THROWS_AS(normal_form(parse_term("(mul a (ttri b c d))")), std::invalid_argument);
}

TEST_CASE("strategies agree on every reduced monomial up to arity 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Term& t : enumerate_all(n, Signature::Reduced)) {
      const TermSum nf = normal_form(t, Strategy::LeftInner);
      for (const auto& [m, c] : nf.terms()) {
        (void)c;
        CHECK(is_normal(m));
      }
      CHECK(normal_form(t, Strategy::LeftOuter) == nf);
      for (unsigned seed = 0; seed < 20; ++seed)
        CHECK(normal_form(t, Strategy::Random, seed) == nf);
    }
}

TEST_CASE("double bracket elimination") {
  CHECK(eliminate_double_bracket(parse_term("(ttri a b c)")).str() ==
        "-1*(mul a (mul b c)) + 1*(mul (mul a b) c) + 1*(tri a b c)");
  const Term plain = parse_term("(mul (tri a b c) (mul d e))");
  CHECK(eliminate_double_bracket(plain) == TermSum::of(plain));
  CHECK(eliminate_double_bracket(parse_term("(ttri a (ttri b c d) e)")).terms().size() == 9);
  // linear in sums
  const TermSum s = Rat(2) * TermSum::of(parse_term("(ttri a b c)"));
  CHECK(eliminate_double_bracket(s) ==
        Rat(2) * eliminate_double_bracket(parse_term("(ttri a b c)")));
  // results live in the reduced signature
  for (const Term& t : enumerate_all(4, Signature::Full)) {
    const TermSum expanded = eliminate_double_bracket(t);
    for (const auto& [m, c] : expanded.terms()) {
      (void)c;
      CHECK(!contains_ttri(m));
    }
  }
}

TEST_CASE("normal monomial enumeration") {
  const auto n3 = enumerate_normal(3);
  std::set<std::string> keys;
  for (const Term& t : n3) keys.insert(print_term(t));
  CHECK(keys == std::set<std::string>{"(mul (mul a b) c)", "(mul a (mul b c))",
                                      "(tri a b c)"});

  for (int n = 1; n <= 8; ++n) {
    const auto normals = enumerate_normal(n);
    CHECK(Int(normals.size()) == count(n));  // normal monomials match the basis size
    for (std::size_t i = 0; i + 1 < normals.size(); ++i)
      CHECK(cmp_terms(normals[i], normals[i + 1]) < 0);  // ascending, no duplicates
  }

  // determinism
  const auto again = enumerate_normal(6);
  const auto first = enumerate_normal(6);
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < again.size(); ++i)
    CHECK(structurally_equal(again[i], first[i]));
}

TEST_CASE("full enumeration and counting") {
  const Int reduced[] = {1, 1, 3, 10, 38, 154, 654, 2871};
  const Int full[] = {1, 1, 4, 15, 68, 322, 1608};
  const Int binary[] = {1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 8; ++n) CHECK(count_monomials(n, Signature::Reduced) == reduced[n - 1]);
  for (int n = 1; n <= 7; ++n) CHECK(count_monomials(n, Signature::Full) == full[n - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(count_monomials(n, Signature::Binary) == binary[n - 1]);

  for (int n = 1; n <= 6; ++n) {
    for (Signature sig : {Signature::Binary, Signature::Reduced, Signature::Full}) {
      const auto all = enumerate_all(n, sig);
      CHECK(Int(all.size()) == count_monomials(n, sig));
      for (std::size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(cmp_terms(all[i], all[i + 1]) < 0);
    }
  }
  CHECK(enumerate_all(5, Signature::Binary).size() == 14);
  CHECK_THROWS_AS(enumerate_all(0, Signature::Full), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_normal(0), std::invalid_argument);
  CHECK_THROWS_AS(count_monomials(-2, Signature::Binary), std::invalid_argument);
}

TEST_CASE("every reduced monomial reaches a normal combination of its arity") {
  for (int n = 1; n <= 5; ++n)
    for (const Term& t : enumerate_all(n, Signature::Reduced)) {
      const TermSum nf = normal_form(t);
      CHECK(nf.arity() == n);
      CHECK(!nf.is_zero());  // monomials never rewrite to zero
    }
}
