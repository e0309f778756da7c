#pragma once

#include "ncop/term.hpp"

#include <vector>

namespace ncop {

// Oriented relation of the reduced presentation (generators mul and tri).
// lhs is a shape pattern whose leaves capture arbitrary subtrees; rhs is a
// combination of patterns over the same captures in the same leaf order.
// Invariant: lhs strictly exceeds every rhs monomial in cmp_terms (checked
// on first use).
struct RewriteRule {
  std::string id;
  Term lhs;
  TermSum rhs;
};

// the six rules; lhs shapes double as the forbidden patterns
const std::vector<RewriteRule>& rules();

// no subtree matches any forbidden pattern
bool is_normal(const Term& t);

enum class Strategy { LeftInner, LeftOuter, Random };

// Rewrites until every surviving monomial is normal.  The largest reducible
// monomial is always processed first, which makes the number of steps at most
// the number of monomials of that arity (each step replaces the current
// maximum by strictly smaller terms); the strategy and seed only pick the
// redex inside a monomial.  Input must be over the reduced signature.
TermSum normal_form(const TermSum& s, Strategy strategy = Strategy::LeftInner,
                    unsigned seed = 0);
TermSum normal_form(const Term& t, Strategy strategy = Strategy::LeftInner, unsigned seed = 0);

// replaces every double bracket by (a.b).c - a.(b.c) + {a,b,c}, recursively
TermSum eliminate_double_bracket(const Term& t);
TermSum eliminate_double_bracket(const TermSum& s);

enum class Signature { Binary, Reduced, Full };

// all monomials of arity n over the signature, ascending in cmp_terms
std::vector<Term> enumerate_all(int n, Signature sig);

// all normal monomials of arity n over the reduced signature, ascending;
// built from the grammar of pattern-free trees, not by filtering
std::vector<Term> enumerate_normal(int n);

Int count_monomials(int n, Signature sig);

}  // namespace ncop
