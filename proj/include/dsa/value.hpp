#pragma once

#include <cstdint>
#include <vector>

#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"

namespace dsa {

// Run over a finite word: states[0..n], symbols[0..n-1], with
// states[i] --symbols[i]/w--> states[i+1] a transition of the automaton.
struct Run {
    std::vector<int> states;
    std::vector<int> symbols;
};

// Discounted sum of the run's weights: sum_i w_i / lambda^i.
// Throws std::invalid_argument if the run is not a run of `a` from its
// initial state.
Rational run_value(const Automaton& a, const Run& run);

// cost(q, u) for all q simultaneously: minimal value of a run on u ending in
// q, infinity if no such run. cost_step advances one letter of the SCALED
// vector C(u) = lambda^{|u|} cost(u) (the form whose pairwise differences
// are gaps); cost_vector folds a word from the initial vector (0 at the
// initial state, inf elsewhere) and rescales back to true costs.
using CostVector = std::vector<ExtRational>;

CostVector initial_cost_vector(const Automaton& a);
CostVector cost_step(const Automaton& a, const CostVector& c, int symbol);
CostVector cost_vector(const Automaton& a, const Word& u);

// A(u) = min_q cost(q, u). Throws std::invalid_argument if no run on u
// exists (cannot happen for complete automata).
Rational word_value(const Automaton& a, const Word& u);

// gap(q, u) = lambda^{|u|} (cost(q, u) - A(u)); infinity if q unreachable
// over u. Throws std::invalid_argument on unknown state or if u has no runs.
ExtRational gap(const Automaton& a, int state, const Word& u);

// Independent oracle: enumerates every run on u by depth-first search and
// takes the minimum. Shares no traversal code with cost_vector. Throws
// CapExceededError once more than `max_steps` run extensions are visited.
Rational brute_force_value(const Automaton& a, const Word& u,
                           std::uint64_t max_steps = 10'000'000);

// Bracket of all infinite-word values extending u:
// A(u) + vmin * S <= A(uw) <= A(u) + vmax * S with
// S = (lambda / (lambda - 1)) / lambda^{|u|}. Requires a complete automaton.
struct TailBounds {
    Rational exact;  // A(u)
    Rational low;
    Rational high;
};
TailBounds tail_bounds(const Automaton& a, const Word& u);

}  // namespace dsa
