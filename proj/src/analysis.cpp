#include "dsa/analysis.hpp"

#include <stdexcept>

#include "dsa/algebra.hpp"
#include "dsa/determinize.hpp"

namespace dsa {
namespace {

// Exact value of the unique infinite run induced by following `next`/`weight`
// from every node of a functional graph: v(i) = weight[i] + v(next[i]) / lambda.
// Cycles are solved in closed form (geometric sum), the rest back-propagates.
std::vector<Rational> solve_functional(const std::vector<int>& next,
                                       const std::vector<Rational>& weight,
                                       const Rational& lambda) {
    std::size_t n = next.size();
    std::vector<Rational> value(n, Rational(0));
    // 0 = unvisited, 1 = on current path, 2 = done
    std::vector<int> mark(n, 0);
    std::vector<int> path;
    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] == 2) continue;
        path.clear();
        int cur = static_cast<int>(root);
        while (mark[static_cast<std::size_t>(cur)] == 0) {
            mark[static_cast<std::size_t>(cur)] = 1;
            path.push_back(cur);
            cur = next[static_cast<std::size_t>(cur)];
        }
        if (mark[static_cast<std::size_t>(cur)] == 1) {
            // found a fresh cycle beginning at `cur`
            std::size_t start = 0;
            while (path[start] != cur) ++start;
            Rational acc = 0, scale = 1;
            for (std::size_t i = start; i < path.size(); ++i) {
                acc += weight[static_cast<std::size_t>(path[i])] * scale;
                scale /= lambda;
            }
            // v = acc + scale * v  (scale = lambda^{-cycle length})
            Rational v = acc / (1 - scale);
            value[static_cast<std::size_t>(cur)] = v;
            mark[static_cast<std::size_t>(cur)] = 2;
            // fill the rest of the cycle backwards
            for (std::size_t i = path.size(); i-- > start + 1;) {
                int s = path[i];
                value[static_cast<std::size_t>(s)] =
                    weight[static_cast<std::size_t>(s)] +
                    value[static_cast<std::size_t>(next[static_cast<std::size_t>(s)])] / lambda;
                mark[static_cast<std::size_t>(s)] = 2;
            }
            // re-solve the cycle head is done; now the stem below `start`
            for (std::size_t i = start; i-- > 0;) {
                int s = path[i];
                value[static_cast<std::size_t>(s)] =
                    weight[static_cast<std::size_t>(s)] +
                    value[static_cast<std::size_t>(next[static_cast<std::size_t>(s)])] / lambda;
                mark[static_cast<std::size_t>(s)] = 2;
            }
        } else {
            // path drains into an already-solved region
            for (std::size_t i = path.size(); i-- > 0;) {
                int s = path[i];
                value[static_cast<std::size_t>(s)] =
                    weight[static_cast<std::size_t>(s)] +
                    value[static_cast<std::size_t>(next[static_cast<std::size_t>(s)])] / lambda;
                mark[static_cast<std::size_t>(s)] = 2;
            }
        }
    }
    return value;
}

Valuation optimize(const Automaton& a, bool maximize) {
    if (!a.deterministic())
        throw std::invalid_argument("sup/inf values require a deterministic automaton");
    if (!a.complete())
        throw std::invalid_argument("sup/inf values require a complete automaton");
    if (a.lambda() <= 1)
        throw std::invalid_argument("sup/inf values require a discount factor > 1");

    int n = a.num_states();
    std::vector<int> policy(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> next(static_cast<std::size_t>(n));
        std::vector<Rational> weight(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            const Move& m = a.moves(q, policy[static_cast<std::size_t>(q)])[0];
            next[static_cast<std::size_t>(q)] = m.to;
            weight[static_cast<std::size_t>(q)] = m.weight;
        }
        std::vector<Rational> value = solve_functional(next, weight, a.lambda());

        // canonical greedy improvement: first strictly better letter in
        // alphabet order; deterministic in `value`, so iteration terminates
        std::vector<int> improved(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            int best_sym = 0;
            Rational best;
            for (int s = 0; s < a.num_symbols(); ++s) {
                const Move& m = a.moves(q, s)[0];
                Rational cand = m.weight + value[static_cast<std::size_t>(m.to)] / a.lambda();
                if (s == 0 || (maximize ? cand > best : cand < best)) {
                    best = cand;
                    best_sym = s;
                }
            }
            improved[static_cast<std::size_t>(q)] = best_sym;
        }
        if (improved == policy) return {std::move(value), std::move(policy)};
        policy = std::move(improved);
    }
}

}  // namespace

Valuation sup_value(const Automaton& a) { return optimize(a, true); }
Valuation inf_value(const Automaton& a) { return optimize(a, false); }

Rational periodic_value(const Automaton& a, int state, const PeriodicWord& w) {
    if (state < 0 || state >= a.num_states())
        throw std::invalid_argument("periodic_value: unknown state");
    if (a.lambda() <= 1)
        throw std::invalid_argument("periodic_value: discount factor must exceed 1");
    int n = a.num_states();
    std::size_t L = w.block.size();

    // Terminal values after the prefix: 0 for a finite word, else the exact
    // min value over runs of block^omega from each state, by min-policy
    // iteration on the (state, block position) product.
    std::vector<ExtRational> terminal(static_cast<std::size_t>(n), ExtRational(Rational(0)));
    if (L > 0) {
        std::size_t pn = static_cast<std::size_t>(n) * L;
        auto pid = [&](int q, std::size_t pos) {
            return static_cast<std::size_t>(q) * L + pos;
        };
        // product policy: index of the chosen move at (q, pos), -1 if the
        // product state is dead (no run continues from it)
        std::vector<int> policy(pn, 0);
        std::vector<bool> dead(pn, false);
        for (int q = 0; q < n; ++q)
            for (std::size_t pos = 0; pos < L; ++pos)
                if (a.moves(q, w.block[pos]).empty()) dead[pid(q, pos)] = true;
        // a dead-end-avoiding policy must exist for live states: prune
        // states whose every move leads to a dead state, to fixpoint
        for (bool changed = true; changed;) {
            changed = false;
            for (int q = 0; q < n; ++q)
                for (std::size_t pos = 0; pos < L; ++pos) {
                    std::size_t s = pid(q, pos);
                    if (dead[s]) continue;
                    const auto& ms = a.moves(q, w.block[pos]);
                    bool any = false;
                    for (const auto& m : ms)
                        if (!dead[pid(m.to, (pos + 1) % L)]) any = true;
                    if (!any) {
                        dead[s] = true;
                        changed = true;
                    }
                }
        }
        for (int q = 0; q < n; ++q)
            for (std::size_t pos = 0; pos < L; ++pos) {
                std::size_t s = pid(q, pos);
                if (dead[s]) continue;
                const auto& ms = a.moves(q, w.block[pos]);
                for (std::size_t i = 0; i < ms.size(); ++i)
                    if (!dead[pid(ms[i].to, (pos + 1) % L)]) {
                        policy[s] = static_cast<int>(i);
                        break;
                    }
            }

        std::vector<Rational> value;
        for (;;) {
            std::vector<int> next(pn, 0);
            std::vector<Rational> weight(pn, Rational(0));
            for (int q = 0; q < n; ++q)
                for (std::size_t pos = 0; pos < L; ++pos) {
                    std::size_t s = pid(q, pos);
                    if (dead[s]) continue;  // value unused
                    const Move& m = a.moves(q, w.block[pos])[static_cast<std::size_t>(policy[s])];
                    next[s] = static_cast<int>(pid(m.to, (pos + 1) % L));
                    weight[s] = m.weight;
                }
            value = solve_functional(next, weight, a.lambda());
            bool changed = false;
            for (int q = 0; q < n; ++q)
                for (std::size_t pos = 0; pos < L; ++pos) {
                    std::size_t s = pid(q, pos);
                    if (dead[s]) continue;
                    const auto& ms = a.moves(q, w.block[pos]);
                    int best = policy[s];
                    Rational bestv =
                        ms[static_cast<std::size_t>(best)].weight +
                        value[pid(ms[static_cast<std::size_t>(best)].to, (pos + 1) % L)] /
                            a.lambda();
                    for (std::size_t i = 0; i < ms.size(); ++i) {
                        if (dead[pid(ms[i].to, (pos + 1) % L)]) continue;
                        Rational cand =
                            ms[i].weight + value[pid(ms[i].to, (pos + 1) % L)] / a.lambda();
                        if (cand < bestv) {
                            bestv = cand;
                            best = static_cast<int>(i);
                        }
                    }
                    if (best != policy[s]) {
                        policy[s] = best;
                        changed = true;
                    }
                }
            if (!changed) break;
        }
        for (int q = 0; q < n; ++q)
            terminal[static_cast<std::size_t>(q)] =
                dead[pid(q, 0)] ? ExtRational::infinity() : ExtRational(value[pid(q, 0)]);
    }

    // Backward dynamic program over the prefix.
    std::vector<ExtRational> v = std::move(terminal);
    for (std::size_t i = w.prefix.size(); i-- > 0;) {
        std::vector<ExtRational> prev(static_cast<std::size_t>(n), ExtRational::infinity());
        for (int q = 0; q < n; ++q) {
            for (const auto& m : a.moves(q, w.prefix[i])) {
                const auto& tail = v[static_cast<std::size_t>(m.to)];
                if (tail.is_infinite()) continue;
                ExtRational cand(m.weight + tail.value() / a.lambda());
                auto& slot = prev[static_cast<std::size_t>(q)];
                if (cand < slot) slot = cand;
            }
        }
        v = std::move(prev);
    }
    const auto& res = v[static_cast<std::size_t>(state)];
    if (res.is_infinite())
        throw std::invalid_argument("periodic_value: no run on the given word");
    return res.value();
}

Automaton shift_constant(const Automaton& a, const Rational& s) {
    if (!a.complete())
        throw std::invalid_argument("shift_constant requires a complete automaton");
    Rational delta = s * (a.lambda() - 1) / a.lambda();
    AutomatonBuilder out;
    out.alphabet(a.alphabet());
    out.states(a.states());
    out.initial(a.states()[a.initial()]);
    out.discount(a.lambda());
    for (const auto& t : a.transitions())
        out.transition(a.states()[t.from], a.alphabet()[t.symbol], a.states()[t.to],
                       t.weight + delta);
    return out.build();
}

namespace {

// epsilon/4-approximate deterministic stand-in: exact for integral lambda,
// gap rounding at p+2 for dyadic lambda.
Automaton approx_det(const Automaton& a, Precision prec, std::size_t cap) {
    if (!a.complete())
        throw std::invalid_argument("approximate decisions require complete automata");
    if (a.discount().integral) return determinize_exact(a, cap).automaton;
    if (a.discount().dyadic_k)
        return approx_determinize_rounding(a, Precision{prec.p + 2}, cap).automaton;
    throw std::invalid_argument(
        "approximate decisions require an integral or 1 + 2^{-k} discount factor");
}

}  // namespace

Decision approx_compare_geq(const Automaton& a, const Automaton& b, Precision prec,
                            std::size_t cap) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("comparison requires a shared alphabet");
    if (a.lambda() != b.lambda())
        throw std::invalid_argument("comparison requires a shared discount factor");
    Automaton da = approx_det(a, prec, cap);
    Automaton db = approx_det(b, prec, cap);
    Automaton c = op_sub(db, da);  // C(w) = B'(w) - A'(w)
    Valuation v = sup_value(c);
    Rational m = v.values[static_cast<std::size_t>(c.initial())];
    Rational eps = prec.epsilon();
    return {m <= eps / 2, m, eps};
}

Decision approx_universal(const Automaton& a, Precision prec, std::size_t cap) {
    Automaton da = approx_det(a, prec, cap);
    Valuation v = sup_value(da);
    Rational m = v.values[static_cast<std::size_t>(da.initial())];
    Rational eps = prec.epsilon();
    return {m <= eps / 2, m, eps};
}

Decision approx_equiv(const Automaton& a, const Automaton& b, Precision prec,
                      std::size_t cap) {
    Decision d1 = approx_compare_geq(a, b, prec, cap);
    Decision d2 = approx_compare_geq(b, a, prec, cap);
    Rational m = d1.sup_value > d2.sup_value ? d1.sup_value : d2.sup_value;
    return {d1.yes && d2.yes, m, d1.epsilon};
}

bool gaps_distinguishable(const Automaton& a, int state, const Word& u, const Word& u2,
                          const PeriodicWord& w, const PeriodicWord& z) {
    if (state < 0 || state >= a.num_states())
        throw std::invalid_argument("gaps_distinguishable: unknown state");
    if (w.prefix.empty() && w.block.empty())
        throw std::invalid_argument("gaps_distinguishable: empty recovery suffix");
    if (u == u2) return false;

    auto cost_at = [&](const Word& word) -> ExtRational {
        CostVector c = cost_vector(a, word);
        return c[static_cast<std::size_t>(state)];
    };
    ExtRational c1 = cost_at(u), c2 = cost_at(u2);
    if (c1.is_infinite() || c2.is_infinite()) return false;  // premise i: runs reach q

    ExtRational g1 = gap(a, state, u), g2 = gap(a, state, u2);
    if (g1 == g2) return false;  // premise ii

    // value of the suffix from q, then of the whole word from the initial state
    Rational suffix_from_q = periodic_value(a, state, w);
    auto concat = [](const Word& head, const PeriodicWord& tail) {
        PeriodicWord full;
        full.prefix = head;
        full.prefix.insert(full.prefix.end(), tail.prefix.begin(), tail.prefix.end());
        full.block = tail.block;
        return full;
    };
    auto recovers = [&](const Word& word, const ExtRational& cost) {
        Rational lhs = periodic_value(a, a.initial(), concat(word, w));
        Rational rhs =
            cost.value() + suffix_from_q / rational_pow(a.lambda(), word.size());
        return lhs == rhs;
    };
    if (!recovers(u, c1) || !recovers(u2, c2)) return false;  // premise iii

    // premise iv: indifference of the z suffix
    auto indifferent = [&](const Word& word) {
        Rational with_z = periodic_value(a, a.initial(), concat(word, z));
        return with_z == word_value(a, word);
    };
    return indifferent(u) && indifferent(u2);
}

}  // namespace dsa
