#pragma once

#include <string>

#include "dsa/automaton.hpp"
#include "dsa/determinize.hpp"

namespace dsa {

// AutomatonFile text format (JSON): {version, discount_factor{num,den},
// alphabet, states, initial, transitions[{from,symbol,to,weight{num,den}}]}.
// num/den are decimal strings so arbitrary-precision weights survive JSON
// readers that coerce numbers to doubles; plain JSON integers are accepted
// on input. Unknown fields are ignored.
std::string serialize(const Automaton& a);

// Serialization of a determinization result: the automaton plus a
// "state_map" documentation field mapping each state name to its gap vector
// (entries as "num/den" or "inf").
std::string serialize(const DeterminizationResult& r);

// Throws std::invalid_argument on malformed JSON, schema violations,
// duplicate transitions, unknown state/symbol references, or lambda <= 1.
Automaton parse_automaton(const std::string& text);

Automaton read_automaton_file(const std::string& path);
void write_automaton_file(const std::string& path, const Automaton& a);
void write_determinization_file(const std::string& path, const DeterminizationResult& r);

}  // namespace dsa
