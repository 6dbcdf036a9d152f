#pragma once

#include <cstddef>

#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"

namespace dsa {

// All binary operations require equal alphabets (same letters, same order)
// and equal discount factors, and throw std::invalid_argument otherwise.

// min(A, B): disjoint union behind a fresh initial state that duplicates
// both originals' initial moves. Works on nondeterministic inputs.
Automaton op_min(const Automaton& a, const Automaton& b);

// A + B: weight-sum product. Deterministic inputs give a deterministic
// result.
Automaton op_add(const Automaton& a, const Automaton& b);

// c * A. Negative c requires a deterministic automaton (min flips to max).
Automaton op_scale(const Automaton& a, const Rational& c);

// -A; requires deterministic.
Automaton op_neg(const Automaton& a);

// A - B; requires deterministic B.
Automaton op_sub(const Automaton& a, const Automaton& b);

// max(A, B) for integral lambda: determinizes both inputs, then runs the
// deficit-pair product (each state tracks lambda^{|u|}(max(A,B)(u) - X(u))
// for X in {A, B}, clamped at twice the maximal cross-automaton weight
// difference). Requires complete inputs; cap as in determinize_exact.
Automaton op_max_integral(const Automaton& a, const Automaton& b,
                          std::size_t cap = 1'000'000);

}  // namespace dsa
