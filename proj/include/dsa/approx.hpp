#pragma once

#include <cstddef>

#include "dsa/automaton.hpp"
#include "dsa/determinize.hpp"
#include "dsa/rational.hpp"

namespace dsa {

// Additive error budget epsilon = 2^-p.
struct Precision {
    unsigned p;
    Rational epsilon() const;
};

// Discount factor of the near-1 family lambda = 1 + 2^-k.
struct DyadicDiscount {
    unsigned k;
    Rational lambda() const;
    static std::optional<DyadicDiscount> from(const Rational& lambda);
};

// Depth-l unfolding of a complete automaton into a tree DDSA over Sigma^{<=l};
// leaves carry self-loops of weight (vmin + vmax) / 2 on every letter. Edge
// from node w to node w.sigma has weight lambda^{|w|} (A(w sigma) - A(w)).
// Exact on words of length <= l; off by at most unfold_error_bound on longer
// and infinite words. Throws CapExceededError when the tree would exceed
// `guard` states.
Automaton unfold(const Automaton& a, unsigned depth, std::size_t guard = 10'000'000);

// m / (2 lambda^{l-1} (lambda - 1)) with m = weight span. Valid for l >= 1.
Rational unfold_error_bound(const Automaton& a, unsigned depth);

// Minimal depth whose error bound is <= 2^-p, for lambda = 1 + 2^-k
// (throws std::invalid_argument otherwise); 0 when all weights are equal.
// Exact rational iteration, no logarithms.
unsigned min_unfold_depth(const Automaton& a, Precision prec);

// Nearest multiple of 2^-(p+k-1); exact halves round toward minus infinity
// on the grid index (ties down).
Rational round_to_grid(const Rational& x, unsigned p, unsigned k);

// Approximate determinization by gap rounding (lambda = 1 + 2^-k only):
// subset construction whose gaps are rounded to the 2^-(p+k-1) grid and
// clamped to infinity at m * 2^(k+1). Terminates unconditionally; `cap` is a
// bug guard. Result value is within 2^-p of the input on every finite and
// infinite word.
DeterminizationResult approx_determinize_rounding(const Automaton& a, Precision prec,
                                                  std::size_t cap = 10'000'000);

}  // namespace dsa
