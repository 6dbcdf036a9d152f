#pragma once

#include <functional>

#include "dsa/determinize.hpp"

namespace dsa {

// Shared worklist of the exact and rounded gap subset constructions.
// `round` (optional) is applied to each gap before the clamp test; gaps
// x with 0 < x and x >= clamp_at become infinity.
DeterminizationResult subset_construct(const Automaton& a, std::size_t cap,
                                       const Rational& clamp_at,
                                       const std::function<Rational(const Rational&)>* round,
                                       const char* cap_message);

}  // namespace dsa
