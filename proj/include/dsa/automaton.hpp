#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsa/rational.hpp"

namespace dsa {

// Discount factor lambda > 1 (lambda > 0 is representable so that validation
// can report bad inputs instead of crashing on them).
struct DiscountFactor {
    Rational value;
    bool integral = false;        // lambda is an integer >= 2
    std::optional<unsigned> dyadic_k;  // set iff lambda == 1 + 2^-k, k >= 1

    static DiscountFactor from(const Rational& lambda);
};

struct Transition {
    int from;
    int symbol;
    int to;
    Rational weight;
};

struct Move {
    int to;
    Rational weight;
};

struct ValidationReport {
    bool complete = false;
    bool deterministic = false;
    bool lambda_ok = false;
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

class Automaton;

// The only way to construct an Automaton. Throws std::invalid_argument on
// structural errors (unknown state/symbol references, duplicate
// (from,symbol,to) triples, duplicate names, nonpositive lambda).
class AutomatonBuilder {
  public:
    AutomatonBuilder& alphabet(std::vector<std::string> letters);
    AutomatonBuilder& states(std::vector<std::string> names);
    AutomatonBuilder& add_state(const std::string& name);
    AutomatonBuilder& initial(const std::string& name);
    AutomatonBuilder& discount(Rational lambda);
    AutomatonBuilder& transition(const std::string& from, const std::string& symbol,
                                 const std::string& to, Rational weight);
    Automaton build() const;

  private:
    std::vector<std::string> alphabet_;
    std::vector<std::string> states_;
    std::string initial_;
    Rational lambda_ = 0;
    struct Raw {
        std::string from, symbol, to;
        Rational weight;
    };
    std::vector<Raw> raw_;
};

class Automaton {
  public:
    // An empty automaton is only a placeholder for later assignment; every
    // populated instance comes from AutomatonBuilder::build().
    Automaton() = default;

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<std::string>& states() const { return states_; }
    int initial() const { return initial_; }
    const DiscountFactor& discount() const { return discount_; }
    const Rational& lambda() const { return discount_.value; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    int num_states() const { return static_cast<int>(states_.size()); }
    int num_symbols() const { return static_cast<int>(alphabet_.size()); }

    // -1 if the name is unknown.
    int symbol_index(const std::string& name) const;
    int state_index(const std::string& name) const;

    // Moves available from (state, symbol), sorted by target state.
    const std::vector<Move>& moves(int state, int symbol) const {
        return moves_[static_cast<std::size_t>(state) * alphabet_.size() +
                      static_cast<std::size_t>(symbol)];
    }

    bool complete() const { return complete_; }
    bool deterministic() const { return deterministic_; }

    // Weight statistics. For an automaton with no transitions these are 0.
    const Rational& min_weight() const { return min_weight_; }
    const Rational& max_weight() const { return max_weight_; }
    // T: maximal difference between two weights.
    const Rational& weight_span() const { return weight_span_; }
    // d: lcm of weight denominators (1 if there are no transitions).
    const Integer& weight_denominator_lcm() const { return weight_den_lcm_; }
    // m = T * d, the gap granularity bound for integral lambda (finite gaps
    // have the form lambda*c/d with 0 <= c/d < 2T).
    Integer gap_granularity() const;

    ValidationReport validate() const;

  private:
    friend class AutomatonBuilder;

    std::vector<std::string> alphabet_;
    std::vector<std::string> states_;
    int initial_ = 0;
    DiscountFactor discount_;
    std::vector<Transition> transitions_;
    std::vector<std::vector<Move>> moves_;  // indexed state * |alphabet| + symbol
    std::map<std::string, int> symbol_index_;
    std::map<std::string, int> state_index_;
    bool complete_ = false;
    bool deterministic_ = false;
    Rational min_weight_ = 0, max_weight_ = 0, weight_span_ = 0;
    Integer weight_den_lcm_ = 1;
};

// A word is a sequence of symbol indices into the automaton's alphabet.
using Word = std::vector<int>;

// Throws std::invalid_argument on unknown letters.
Word to_word(const Automaton& a, const std::vector<std::string>& letters);

// Splits on the separator (default ','), then resolves each letter.
Word word_from_string(const Automaton& a, const std::string& text, char sep = ',');

std::string word_to_string(const Automaton& a, const Word& w, char sep = ',');

}  // namespace dsa
