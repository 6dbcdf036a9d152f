#include "dsa/determinize.hpp"

#include <map>
#include <stdexcept>

#include "dsa/errors.hpp"
#include "subset.hpp"

namespace dsa {
namespace {

struct GapVectorLess {
    bool operator()(const GapVector& a, const GapVector& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            bool ai = a[i].is_infinite(), bi = b[i].is_infinite();
            if (ai != bi) return bi;  // finite < infinite
            if (ai) continue;
            int c = cmp(a[i].value(), b[i].value());
            if (c != 0) return c < 0;
        }
        return false;
    }
};

GapStep gap_successor_impl(const Automaton& a, const GapVector& g, int symbol,
                           const Rational& clamp_at,
                           const std::function<Rational(const Rational&)>* round) {
    int n = a.num_states();
    GapVector c(static_cast<std::size_t>(n), ExtRational::infinity());
    for (int j = 0; j < n; ++j) {
        if (g[static_cast<std::size_t>(j)].is_infinite()) continue;
        const Rational& gj = g[static_cast<std::size_t>(j)].value();
        for (const auto& m : a.moves(j, symbol)) {
            ExtRational cand(gj + m.weight);
            auto& slot = c[static_cast<std::size_t>(m.to)];
            if (cand < slot) slot = cand;
        }
    }
    ExtRational cmin = ExtRational::infinity();
    for (const auto& e : c) cmin = min(cmin, e);
    if (cmin.is_infinite())
        throw std::invalid_argument("gap_successor: no transition on letter (incomplete input)");

    GapStep step;
    step.weight = cmin.value();
    step.next.assign(static_cast<std::size_t>(n), ExtRational::infinity());
    for (int h = 0; h < n; ++h) {
        const auto& ch = c[static_cast<std::size_t>(h)];
        if (ch.is_infinite()) continue;
        Rational x = a.lambda() * (ch.value() - step.weight);
        if (round) x = (*round)(x);
        // clamp only strictly positive gaps: with an all-equal weight profile
        // the threshold is 0 and the mandatory zero entry must survive
        if (x > 0 && x >= clamp_at) continue;
        step.next[static_cast<std::size_t>(h)] = x;
    }
    return step;
}

}  // namespace

GapStep gap_successor(const Automaton& a, const GapVector& g, int symbol) {
    if (symbol < 0 || symbol >= a.num_symbols())
        throw std::invalid_argument("gap_successor: unknown letter");
    if (g.size() != static_cast<std::size_t>(a.num_states()))
        throw std::invalid_argument("gap_successor: vector size mismatch");
    return gap_successor_impl(a, g, symbol, 2 * a.weight_span(), nullptr);
}

DeterminizationResult subset_construct(
    const Automaton& a, std::size_t cap, const Rational& clamp_at,
    const std::function<Rational(const Rational&)>* round,
    const char* cap_message) {
    if (!a.complete())
        throw std::invalid_argument("determinization requires a complete automaton");
    if (a.lambda() <= 1)
        throw std::invalid_argument("determinization requires a discount factor > 1");

    DeterminizationResult res;
    std::map<GapVector, int, GapVectorLess> id;
    std::vector<GapVector> order;

    GapVector init(static_cast<std::size_t>(a.num_states()), ExtRational::infinity());
    init[static_cast<std::size_t>(a.initial())] = Rational(0);
    id.emplace(init, 0);
    order.push_back(init);

    struct Edge {
        int from, symbol, to;
        Rational weight;
    };
    std::vector<Edge> edges;

    // BFS over gap vectors, letters in alphabet order: canonical naming.
    for (std::size_t front = 0; front < order.size(); ++front) {
        res.stats.iterations++;
        GapVector cur = order[front];  // copy: order may reallocate below
        for (int s = 0; s < a.num_symbols(); ++s) {
            GapStep step = gap_successor_impl(a, cur, s, clamp_at, round);
            auto [it, inserted] = id.emplace(step.next, static_cast<int>(order.size()));
            if (inserted) {
                if (order.size() >= cap)
                    throw CapExceededError(cap_message, order.size());
                order.push_back(step.next);
            }
            edges.push_back({static_cast<int>(front), s, it->second, step.weight});
        }
    }

    AutomatonBuilder b;
    b.alphabet(a.alphabet());
    std::vector<std::string> names;
    names.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) names.push_back("d" + std::to_string(i));
    b.states(names);
    b.initial("d0");
    b.discount(a.lambda());
    for (const auto& e : edges)
        b.transition(names[static_cast<std::size_t>(e.from)],
                     a.alphabet()[static_cast<std::size_t>(e.symbol)],
                     names[static_cast<std::size_t>(e.to)], e.weight);
    res.automaton = b.build();
    res.state_gaps = std::move(order);
    res.stats.states_created = res.state_gaps.size();
    return res;
}

DeterminizationResult determinize_exact(const Automaton& a, std::size_t cap) {
    DeterminizationResult res =
        subset_construct(a, cap, 2 * a.weight_span(), nullptr, "state cap exceeded");
    if (a.discount().integral) res.stats.state_bound = theoretical_state_bound(a);
    return res;
}

std::optional<Integer> theoretical_state_bound(const Automaton& a, std::size_t max_bits) {
    if (!a.discount().integral)
        throw std::invalid_argument("bound applies to integral factors only");
    Integer m = a.gap_granularity();
    unsigned long n = static_cast<unsigned long>(a.num_states());
    if (m <= 1) return Integer(1);  // T = 0 or m = 1: one reachable profile shape
    std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    if (bits * n > max_bits) return std::nullopt;
    Integer bound;
    mpz_pow_ui(bound.get_mpz_t(), m.get_mpz_t(), n);
    return bound;
}

std::string check_gap_vector(const Automaton& a, const GapVector& g) {
    bool has_zero = false;
    Rational two_t = 2 * a.weight_span();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_infinite()) continue;
        const Rational& v = g[i].value();
        if (v == 0) has_zero = true;
        if (v < 0) return "negative gap at state " + std::to_string(i);
        if (v > 0 && v >= two_t)
            return "unclamped gap " + to_string(v) + " >= 2T at state " + std::to_string(i);
        if (a.discount().integral) {
            // finite gaps have the form lambda * c / d
            Rational scaled = v * Rational(a.weight_denominator_lcm()) / a.lambda();
            if (scaled.get_den() != 1)
                return "gap " + to_string(v) + " not of the form lambda*c/d";
        }
    }
    if (!has_zero) return "no zero entry";
    return "";
}

}  // namespace dsa
