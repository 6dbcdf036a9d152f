#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"
#include "dsa/value.hpp"

namespace dsa {

// State of the subset construction: recoverable gap per original state
// (lambda^{|u|}(cost(q,u) - A(u)), clamped to infinity once unrecoverable).
using GapVector = std::vector<ExtRational>;

struct GapStep {
    GapVector next;
    Rational weight;  // c = min_h min_j (g_j + gamma(q_j, sigma, q_h))
};

// One transition of the gap subset construction, with the exact clamp
// x >= 2T (applied only to strictly positive x; with T = 0 every finite gap
// is 0 and the mandatory zero entry must survive).
GapStep gap_successor(const Automaton& a, const GapVector& g, int symbol);

struct DeterminizationStats {
    std::size_t states_created = 0;
    std::size_t iterations = 0;  // worklist pops
    // m^n for integral lambda (m = T*d); unset when lambda is not integral
    // or the bound overflows the magnitude guard.
    std::optional<Integer> state_bound;
};

struct DeterminizationResult {
    Automaton automaton;
    std::vector<GapVector> state_gaps;  // index = state index of `automaton`
    DeterminizationStats stats;
};

// Exact determinization by gap subset construction. Requires a complete
// automaton with lambda > 1. Guaranteed to terminate for integral lambda;
// throws CapExceededError when more than `cap` states are created.
// State naming is canonical: breadth-first discovery order, letters taken in
// alphabet order, names "d0", "d1", ...
DeterminizationResult determinize_exact(const Automaton& a, std::size_t cap = 1'000'000);

// m^n where m = gap granularity, n = state count. Requires integral lambda.
// nullopt when the bound exceeds the magnitude guard (max_bits of binary
// magnitude).
std::optional<Integer> theoretical_state_bound(const Automaton& a,
                                               std::size_t max_bits = 4096);

// Test support: checks the gap-vector invariants (some entry is 0 unless the
// vector is the initial one; finite entries lie in [0, 2T); for integral
// lambda, entries are multiples of lambda/d). Returns a description of the
// first violation, or empty string.
std::string check_gap_vector(const Automaton& a, const GapVector& g);

}  // namespace dsa
