#pragma once

#include <cstddef>

#include "dsa/approx.hpp"
#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"
#include "dsa/value.hpp"

namespace dsa {

// Exact optimal values over infinite words on a deterministic complete
// automaton, by policy iteration with canonical (alphabet-order, keep on
// tie) greedy improvement. values[q] = sup/inf over infinite words from q;
// policy[q] = the letter achieving it.
struct Valuation {
    std::vector<Rational> values;
    std::vector<int> policy;
};

Valuation sup_value(const Automaton& a);
Valuation inf_value(const Automaton& a);

// An ultimately periodic word u . w^omega; empty block means the finite word
// u (its value is the finite-word value).
struct PeriodicWord {
    Word prefix;
    Word block;
};

// min over runs from `state` of the discounted sum on the (possibly
// infinite) word. Works on nondeterministic automata; requires at least one
// run (throws otherwise). For an infinite block this is exact min-policy
// iteration on the (state x block position) product.
Rational periodic_value(const Automaton& a, int state, const PeriodicWord& w);

// Adds s (lambda-1)/lambda to every weight: every infinite-word value moves
// by exactly s.
Automaton shift_constant(const Automaton& a, const Rational& s);

struct Decision {
    bool yes;            // no <=> sup_value > epsilon/2
    Rational sup_value;  // the computed m
    Rational epsilon;    // 2^-p
};

// Approximate decisions with additive slack epsilon = 2^-p over infinite
// words: "no" answers are exact, "yes" answers hold up to epsilon. Inputs
// must be complete and share alphabet and lambda; lambda must be integral
// (exact determinization) or of the form 1+2^-k (gap rounding at p+2, an
// epsilon/4-approximation).
Decision approx_compare_geq(const Automaton& a, const Automaton& b, Precision prec,
                            std::size_t cap = 1'000'000);
Decision approx_universal(const Automaton& a, Precision prec, std::size_t cap = 1'000'000);
Decision approx_equiv(const Automaton& a, const Automaton& b, Precision prec,
                      std::size_t cap = 1'000'000);

// Checks the four premises under which states with different gaps force
// distinct determinization states: cost(q,u) and cost(q,u2) finite and
// attained with A(u w) = cost(q,u) + lambda^{-|u|} A^q(w) (same for u2),
// gap(q,u) != gap(q,u2), and A(u z) == A(u), A(u2 z) == A(u2) for the
// recovery suffix z. u == u2 returns false.
bool gaps_distinguishable(const Automaton& a, int state, const Word& u, const Word& u2,
                          const PeriodicWord& w, const PeriodicWord& z);

}  // namespace dsa
