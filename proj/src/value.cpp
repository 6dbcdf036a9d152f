#include "dsa/value.hpp"

#include <stdexcept>

#include "dsa/errors.hpp"

namespace dsa {

Rational run_value(const Automaton& a, const Run& run) {
    if (run.states.size() != run.symbols.size() + 1)
        throw std::invalid_argument("not a run of this automaton: length mismatch");
    if (run.states.empty() || run.states[0] != a.initial())
        throw std::invalid_argument("not a run of this automaton: wrong start state");
    Rational total = 0;
    Rational scale = 1;
    for (std::size_t i = 0; i < run.symbols.size(); ++i) {
        int from = run.states[i], sym = run.symbols[i], to = run.states[i + 1];
        if (from < 0 || from >= a.num_states() || to < 0 || to >= a.num_states() ||
            sym < 0 || sym >= a.num_symbols())
            throw std::invalid_argument("not a run of this automaton: index out of range");
        const Rational* w = nullptr;
        for (const auto& m : a.moves(from, sym))
            if (m.to == to) {
                w = &m.weight;
                break;
            }
        if (!w) throw std::invalid_argument("not a run of this automaton: missing transition");
        total += *w * scale;
        scale /= a.lambda();
    }
    return total;
}

CostVector initial_cost_vector(const Automaton& a) {
    CostVector c(static_cast<std::size_t>(a.num_states()), ExtRational::infinity());
    c[static_cast<std::size_t>(a.initial())] = Rational(0);
    return c;
}

CostVector cost_step(const Automaton& a, const CostVector& c, int symbol) {
    // Scaled recurrence: with C(u) = lambda^{|u|} cost(u),
    // C_h(u sigma) = min_j lambda (C_j(u) + gamma(q_j, sigma, q_h)).
    if (symbol < 0 || symbol >= a.num_symbols())
        throw std::invalid_argument("cost_step: unknown letter");
    CostVector next(c.size(), ExtRational::infinity());
    for (int j = 0; j < a.num_states(); ++j) {
        if (c[static_cast<std::size_t>(j)].is_infinite()) continue;
        const Rational& base = c[static_cast<std::size_t>(j)].value();
        for (const auto& m : a.moves(j, symbol)) {
            ExtRational cand(a.lambda() * (base + m.weight));
            auto& slot = next[static_cast<std::size_t>(m.to)];
            if (cand < slot) slot = cand;
        }
    }
    return next;
}

CostVector cost_vector(const Automaton& a, const Word& u) {
    // Work in scaled costs (multiplied by lambda^{position}) to keep the
    // per-step recurrence integeresque, then rescale once at the end.
    CostVector c = initial_cost_vector(a);
    for (int sym : u) c = cost_step(a, c, sym);
    if (!u.empty()) {
        Rational inv = 1 / rational_pow(a.lambda(), u.size());
        for (auto& e : c) e = inv * e;
    }
    return c;
}

Rational word_value(const Automaton& a, const Word& u) {
    CostVector c = cost_vector(a, u);
    ExtRational best = ExtRational::infinity();
    for (const auto& e : c) best = min(best, e);
    if (best.is_infinite()) throw std::invalid_argument("word_value: word has no run");
    return best.value();
}

ExtRational gap(const Automaton& a, int state, const Word& u) {
    if (state < 0 || state >= a.num_states())
        throw std::invalid_argument("gap: unknown state");
    CostVector c = cost_vector(a, u);
    ExtRational best = ExtRational::infinity();
    for (const auto& e : c) best = min(best, e);
    if (best.is_infinite()) throw std::invalid_argument("gap: word has no run");
    const auto& cq = c[static_cast<std::size_t>(state)];
    if (cq.is_infinite()) return ExtRational::infinity();
    return ExtRational(rational_pow(a.lambda(), u.size()) * (cq.value() - best.value()));
}

namespace {

// Explicit run enumeration, on purpose sharing nothing with the cost-vector
// dynamic program above.
void enumerate_runs(const Automaton& a, const Word& u, std::size_t pos, int state,
                    const Rational& acc, const Rational& scale, bool& found,
                    Rational& best, std::uint64_t& budget) {
    if (pos == u.size()) {
        if (!found || acc < best) {
            best = acc;
            found = true;
        }
        return;
    }
    for (const auto& m : a.moves(state, u[pos])) {
        if (budget == 0)
            throw CapExceededError("oracle limit", 0);
        --budget;
        enumerate_runs(a, u, pos + 1, m.to, acc + m.weight * scale, scale / a.lambda(),
                       found, best, budget);
    }
}

}  // namespace

Rational brute_force_value(const Automaton& a, const Word& u, std::uint64_t max_steps) {
    bool found = false;
    Rational best = 0;
    std::uint64_t budget = max_steps;
    enumerate_runs(a, u, 0, a.initial(), Rational(0), Rational(1), found, best, budget);
    if (!found) throw std::invalid_argument("brute_force_value: word has no run");
    return best;
}

TailBounds tail_bounds(const Automaton& a, const Word& u) {
    if (!a.complete()) throw std::invalid_argument("tail_bounds: automaton must be complete");
    TailBounds tb;
    tb.exact = word_value(a, u);
    Rational s = (a.lambda() / (a.lambda() - 1)) / rational_pow(a.lambda(), u.size());
    tb.low = tb.exact + a.min_weight() * s;
    tb.high = tb.exact + a.max_weight() * s;
    return tb;
}

}  // namespace dsa
