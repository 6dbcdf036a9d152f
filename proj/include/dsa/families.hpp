#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"

namespace dsa {

// Named parametric automaton families (the classic lower-bound and
// counterexample constructions). Parameters are family-specific; see the
// typed generators below for their meaning and constraints.
struct FamilySpec {
    std::string name;
    std::map<std::string, Rational> params;
};

// Dispatching generator: one automaton for every family except nomax_pair,
// which yields {A, B}. Throws std::invalid_argument on unknown family or
// invalid parameters (message names the violated constraint).
std::vector<Automaton> generate(const FamilySpec& spec);

// Typed generators.
// 3-state NDSA over {1, 0, -1, -k} with integral lambda; an equivalent DDSA
// needs at least k - lambda states.
Automaton weight_lb_family(unsigned lambda, unsigned k);
// (l+2)-state NDSA over l-tuples of {-lambda*k, ..., 1} (letters joined with
// '|'); determinization needs at least k^l states.
Automaton combined_lb_family(unsigned lambda, unsigned k, unsigned l);
// lambda = h/k nonintegral (h, k coprime, h > k >= 1); has no equivalent
// DDSA: gaps along the greedy word never repeat.
Automaton nondeterminizable_family(unsigned h, unsigned k);
// "last-by-k position is an 'a'" language automaton over {a, b, #}, value of
// w < 0 iff the block before the first '#' is in L_k.
Automaton last_by_k_family(const Rational& lambda, unsigned k);
// Incomplete 2-state automaton (q1 lacks a 'b'): gap(q2, a^n) = sum lambda^i
// grows unboundedly yet stays recoverable.
Automaton incomplete_b_family(unsigned lambda);
// lambda = 3/2 star automaton over {0, +-1/3, +-2/3, -1} realizing every gap
// i/2^l at depth l (approximation precision lower bound).
Automaton precision_lb_family();
// lambda = 1 + 2^-k star automaton over {1, 0, -1} (discount-factor
// approximation lower bound).
Automaton discount_lb_family(unsigned k);
// (n+2)-state star automaton over {0, 1_1..1_n, -1_1..-1_n} (state-count
// approximation lower bound): cost(q_i, u_b) encodes bit i of b.
// Requires lambda^{n-1} < 3 with lambda = 1 + 2^{-k}, so k grows with n.
Automaton statecount_lb_family(unsigned n, unsigned k = 4);
// lambda = 5/2 pair (A = zero automaton, B over {0, 2/5, -1/8, -1/4, -1/2,
// -1}) with no NDSA computing max(A, B).
std::pair<Automaton, Automaton> nomax_pair_family();

// Witness words used by the property checks and the lower-bound harnesses.
// weight_lb: u_x with gap(q2, u_x) = lambda * x (base-lambda digit
// recurrence rebased at u_1 = <1>).
Word weight_lb_witness(const Automaton& a, unsigned lambda, unsigned x);
// nondeterminizable: the greedy locally-optimal word, together with the
// gap of q2 after each prefix (length `n` prefixes).
std::pair<Word, std::vector<Rational>> nondeterminizable_witness(const Automaton& a,
                                                                 unsigned h, unsigned k,
                                                                 unsigned n);
// precision_lb: words u_{l,i} with gap(q2, u_{l,i}) = i / 2^l, for i <= 2^l.
std::vector<Word> precision_lb_witnesses(const Automaton& a, unsigned l);
// nomax_pair: words u_{j,k} with gap(B, u_{j,k}) = 5j / 2^k, for
// j <= ceil(2^k / 5), indexed by j.
std::vector<Word> nomax_witnesses(const Automaton& b, unsigned k);

struct PropertyReport {
    std::vector<std::string> checks;    // human-readable, one per verified fact
    std::vector<std::string> failures;  // empty iff ok
    bool ok() const { return failures.empty(); }
};

// Machine-checks every quantitative fact the defining proof asserts about
// the generated automaton (gap pins, distinctness, recoverability,
// cost thresholds). This is the reconstruction's acceptance test.
PropertyReport family_properties(const FamilySpec& spec);

}  // namespace dsa
