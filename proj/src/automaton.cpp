#include "dsa/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsa {

DiscountFactor DiscountFactor::from(const Rational& lambda) {
    DiscountFactor d;
    d.value = lambda;
    d.integral = lambda.get_den() == 1 && lambda >= 2;
    if (lambda > 1 && lambda.get_num() - lambda.get_den() == 1) {
        // lambda = (2^k + 1) / 2^k iff den is a power of two (and k >= 1)
        const Integer& den = lambda.get_den();
        if (den >= 2 && mpz_popcount(den.get_mpz_t()) == 1) {
            d.dyadic_k = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
        }
    }
    return d;
}

AutomatonBuilder& AutomatonBuilder::alphabet(std::vector<std::string> letters) {
    alphabet_ = std::move(letters);
    return *this;
}

AutomatonBuilder& AutomatonBuilder::states(std::vector<std::string> names) {
    states_ = std::move(names);
    return *this;
}

AutomatonBuilder& AutomatonBuilder::add_state(const std::string& name) {
    states_.push_back(name);
    return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(const std::string& name) {
    initial_ = name;
    return *this;
}

AutomatonBuilder& AutomatonBuilder::discount(Rational lambda) {
    lambda_ = std::move(lambda);
    return *this;
}

AutomatonBuilder& AutomatonBuilder::transition(const std::string& from,
                                               const std::string& symbol,
                                               const std::string& to, Rational weight) {
    raw_.push_back({from, symbol, to, std::move(weight)});
    return *this;
}

Automaton AutomatonBuilder::build() const {
    Automaton a;
    a.alphabet_ = alphabet_;
    a.states_ = states_;
    if (states_.empty()) throw std::invalid_argument("automaton: no states");
    if (alphabet_.empty()) throw std::invalid_argument("automaton: empty alphabet");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (!a.symbol_index_.emplace(alphabet_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("automaton: duplicate letter '" + alphabet_[i] + "'");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!a.state_index_.emplace(states_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("automaton: duplicate state '" + states_[i] + "'");
    }
    auto it = a.state_index_.find(initial_);
    if (it == a.state_index_.end())
        throw std::invalid_argument("automaton: unknown initial state '" + initial_ + "'");
    a.initial_ = it->second;
    if (lambda_ <= 0) throw std::invalid_argument("automaton: discount factor must be positive");
    a.discount_ = DiscountFactor::from(lambda_);

    a.moves_.resize(states_.size() * alphabet_.size());
    std::set<std::tuple<int, int, int>> seen;
    bool first = true;
    for (const auto& r : raw_) {
        auto fi = a.state_index_.find(r.from);
        auto si = a.symbol_index_.find(r.symbol);
        auto ti = a.state_index_.find(r.to);
        if (fi == a.state_index_.end())
            throw std::invalid_argument("automaton: unknown state '" + r.from + "'");
        if (si == a.symbol_index_.end())
            throw std::invalid_argument("automaton: unknown letter '" + r.symbol + "'");
        if (ti == a.state_index_.end())
            throw std::invalid_argument("automaton: unknown state '" + r.to + "'");
        if (!seen.emplace(fi->second, si->second, ti->second).second)
            throw std::invalid_argument("automaton: duplicate transition (" + r.from + ", " +
                                        r.symbol + ", " + r.to + ")");
        a.transitions_.push_back({fi->second, si->second, ti->second, r.weight});
        if (first) {
            a.min_weight_ = a.max_weight_ = r.weight;
            first = false;
        } else {
            if (r.weight < a.min_weight_) a.min_weight_ = r.weight;
            if (r.weight > a.max_weight_) a.max_weight_ = r.weight;
        }
        Integer den = r.weight.get_den();
        mpz_lcm(a.weight_den_lcm_.get_mpz_t(), a.weight_den_lcm_.get_mpz_t(),
                den.get_mpz_t());
    }
    a.weight_span_ = a.max_weight_ - a.min_weight_;

    std::sort(a.transitions_.begin(), a.transitions_.end(),
              [](const Transition& x, const Transition& y) {
                  return std::tie(x.from, x.symbol, x.to) < std::tie(y.from, y.symbol, y.to);
              });
    for (const auto& t : a.transitions_)
        a.moves_[static_cast<std::size_t>(t.from) * alphabet_.size() +
                 static_cast<std::size_t>(t.symbol)]
            .push_back({t.to, t.weight});

    a.complete_ = true;
    a.deterministic_ = true;
    for (const auto& ms : a.moves_) {
        if (ms.empty()) a.complete_ = false;
        if (ms.size() > 1) a.deterministic_ = false;
    }
    return a;
}

int Automaton::symbol_index(const std::string& name) const {
    auto it = symbol_index_.find(name);
    return it == symbol_index_.end() ? -1 : it->second;
}

int Automaton::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    return it == state_index_.end() ? -1 : it->second;
}

Integer Automaton::gap_granularity() const {
    Rational m = weight_span_ * Rational(weight_den_lcm_);
    return m.get_num();  // exact: d clears every denominator
}

ValidationReport Automaton::validate() const {
    ValidationReport r;
    r.complete = complete_;
    r.deterministic = deterministic_;
    r.lambda_ok = discount_.value > 1;
    if (!r.lambda_ok)
        r.issues.push_back("discount factor must exceed 1, got " + to_string(discount_.value));
    for (int q = 0; q < num_states(); ++q)
        for (int s = 0; s < num_symbols(); ++s)
            if (moves(q, s).empty())
                r.issues.push_back("incomplete: no transition from '" + states_[q] +
                                   "' on '" + alphabet_[s] + "'");
    return r;
}

Word to_word(const Automaton& a, const std::vector<std::string>& letters) {
    Word w;
    w.reserve(letters.size());
    for (const auto& s : letters) {
        int i = a.symbol_index(s);
        if (i < 0) throw std::invalid_argument("word: unknown letter '" + s + "'");
        w.push_back(i);
    }
    return w;
}

Word word_from_string(const Automaton& a, const std::string& text, char sep) {
    std::vector<std::string> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
    }
    return to_word(a, parts);
}

std::string word_to_string(const Automaton& a, const Word& w, char sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += a.alphabet()[static_cast<std::size_t>(w[i])];
    }
    return out;
}

}  // namespace dsa
