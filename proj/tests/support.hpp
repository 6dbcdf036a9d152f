#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dsa/automaton.hpp"
#include "dsa/rational.hpp"
#include "dsa/value.hpp"

namespace testsup {

using dsa::Automaton;
using dsa::Rational;
using dsa::Word;

inline const std::vector<std::string>& letter_names() {
    static const std::vector<std::string> names = {"a", "b", "c", "d"};
    return names;
}

struct RandomSpec {
    int states = 3;
    int letters = 2;
    Rational lambda = 2;
    std::vector<Rational> weights = {Rational(0), Rational(1), Rational(-1)};
    bool deterministic = false;
    int max_moves = 2;  // per (state, letter) cell when nondeterministic
};

// Random complete automaton; nondeterministic cells hold 1..max_moves moves.
inline Automaton random_automaton(std::mt19937& rng, const RandomSpec& spec) {
    dsa::AutomatonBuilder b;
    std::vector<std::string> alpha(letter_names().begin(),
                                   letter_names().begin() + spec.letters);
    b.alphabet(alpha);
    std::vector<std::string> states;
    for (int i = 0; i < spec.states; ++i) states.push_back("s" + std::to_string(i));
    b.states(states);
    b.initial("s0");
    b.discount(spec.lambda);
    std::uniform_int_distribution<int> state_d(0, spec.states - 1);
    std::uniform_int_distribution<std::size_t> weight_d(0, spec.weights.size() - 1);
    std::uniform_int_distribution<int> count_d(1, spec.deterministic ? 1 : spec.max_moves);
    for (int q = 0; q < spec.states; ++q)
        for (int s = 0; s < spec.letters; ++s) {
            int count = count_d(rng);
            std::vector<int> targets;
            while (static_cast<int>(targets.size()) < count) {
                int t = state_d(rng);
                bool dup = false;
                for (int u : targets) dup |= (u == t);
                if (!dup) targets.push_back(t);
            }
            for (int t : targets)
                b.transition(states[static_cast<std::size_t>(q)], alpha[static_cast<std::size_t>(s)],
                             states[static_cast<std::size_t>(t)],
                             spec.weights[weight_d(rng)]);
        }
    return b.build();
}

// Every word of length 1..maxlen over the first `letters` symbols.
inline void for_each_word(int letters, int maxlen, const std::function<void(const Word&)>& fn) {
    Word w;
    std::function<void(int)> rec = [&](int depth) {
        if (depth > 0) fn(w);
        if (depth == maxlen) return;
        for (int s = 0; s < letters; ++s) {
            w.push_back(s);
            rec(depth + 1);
            w.pop_back();
        }
    };
    rec(0);
}

// Single-state automaton where every letter self-loops with weight w.
inline Automaton constant_automaton(const Rational& w, const Rational& lambda,
                                    int letters = 2) {
    dsa::AutomatonBuilder b;
    std::vector<std::string> alpha(letter_names().begin(), letter_names().begin() + letters);
    b.alphabet(alpha).states({"s"}).initial("s").discount(lambda);
    for (const auto& s : alpha) b.transition("s", s, "s", w);
    return b.build();
}

}  // namespace testsup
