#include "dsa/algebra.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "dsa/determinize.hpp"
#include "dsa/errors.hpp"

namespace dsa {
namespace {

void require_compatible(const Automaton& a, const Automaton& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("operands must share the same alphabet");
    if (a.lambda() != b.lambda())
        throw std::invalid_argument("operands must share the same discount factor");
}

void require_complete(const Automaton& a, const char* op) {
    if (!a.complete())
        throw std::invalid_argument(std::string(op) + " requires complete operands");
}

}  // namespace

Automaton op_min(const Automaton& a, const Automaton& b) {
    require_compatible(a, b);
    require_complete(a, "op_min");
    require_complete(b, "op_min");
    AutomatonBuilder out;
    out.alphabet(a.alphabet());
    out.discount(a.lambda());
    out.add_state("in");
    for (const auto& s : a.states()) out.add_state("a_" + s);
    for (const auto& s : b.states()) out.add_state("b_" + s);
    out.initial("in");
    for (const auto& t : a.transitions()) {
        out.transition("a_" + a.states()[t.from], a.alphabet()[t.symbol],
                       "a_" + a.states()[t.to], t.weight);
        if (t.from == a.initial())
            out.transition("in", a.alphabet()[t.symbol], "a_" + a.states()[t.to], t.weight);
    }
    for (const auto& t : b.transitions()) {
        out.transition("b_" + b.states()[t.from], b.alphabet()[t.symbol],
                       "b_" + b.states()[t.to], t.weight);
        if (t.from == b.initial())
            out.transition("in", b.alphabet()[t.symbol], "b_" + b.states()[t.to], t.weight);
    }
    return out.build();
}

Automaton op_add(const Automaton& a, const Automaton& b) {
    require_compatible(a, b);
    require_complete(a, "op_add");
    require_complete(b, "op_add");
    AutomatonBuilder out;
    out.alphabet(a.alphabet());
    out.discount(a.lambda());
    auto name = [&](int p, int q) { return a.states()[p] + "|" + b.states()[q]; };
    for (const auto& sp : a.states())
        for (const auto& sq : b.states()) out.add_state(sp + "|" + sq);
    out.initial(name(a.initial(), b.initial()));
    for (int p = 0; p < a.num_states(); ++p)
        for (int q = 0; q < b.num_states(); ++q)
            for (int s = 0; s < a.num_symbols(); ++s)
                for (const auto& ma : a.moves(p, s))
                    for (const auto& mb : b.moves(q, s))
                        out.transition(name(p, q), a.alphabet()[s], name(ma.to, mb.to),
                                       ma.weight + mb.weight);
    return out.build();
}

Automaton op_scale(const Automaton& a, const Rational& c) {
    if (c < 0 && !a.deterministic())
        throw std::invalid_argument("negative scaling requires deterministic input");
    AutomatonBuilder out;
    out.alphabet(a.alphabet());
    out.states(a.states());
    out.initial(a.states()[a.initial()]);
    out.discount(a.lambda());
    for (const auto& t : a.transitions())
        out.transition(a.states()[t.from], a.alphabet()[t.symbol], a.states()[t.to],
                       c * t.weight);
    return out.build();
}

Automaton op_neg(const Automaton& a) {
    if (!a.deterministic())
        throw std::invalid_argument("negation requires deterministic input");
    return op_scale(a, Rational(-1));
}

Automaton op_sub(const Automaton& a, const Automaton& b) {
    if (!a.deterministic() || !b.deterministic())
        throw std::invalid_argument("subtraction requires deterministic inputs");
    return op_add(a, op_neg(b));
}

Automaton op_max_integral(const Automaton& a, const Automaton& b, std::size_t cap) {
    require_compatible(a, b);
    if (!a.discount().integral)
        throw std::invalid_argument("max closure guaranteed only for integral factors");
    require_complete(a, "op_max_integral");
    require_complete(b, "op_max_integral");
    Automaton da = determinize_exact(a, cap).automaton;
    Automaton db = determinize_exact(b, cap).automaton;

    // Deficit of each operand: lambda^{|u|} (max(A,B)(u) - X(u)) >= 0, the
    // mirror image of a gap; clamps beyond twice the maximal cross-automaton
    // weight difference (then X can never catch up with the max again).
    Rational cross = a.max_weight() - b.min_weight();
    if (b.max_weight() - a.min_weight() > cross) cross = b.max_weight() - a.min_weight();
    Rational clamp_at = 2 * cross;

    using Key = std::tuple<int, int, bool, Rational, bool, Rational>;
    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const {
            if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
            if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
            if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) < std::get<2>(y);
            int c = cmp(std::get<3>(x), std::get<3>(y));
            if (c != 0) return c < 0;
            if (std::get<4>(x) != std::get<4>(y)) return std::get<4>(x) < std::get<4>(y);
            return cmp(std::get<5>(x), std::get<5>(y)) < 0;
        }
    };
    auto mk = [](int p, const ExtRational& dp, int q, const ExtRational& dq) {
        return Key{p, q, dp.is_infinite(), dp.is_infinite() ? Rational(0) : dp.value(),
                   dq.is_infinite(), dq.is_infinite() ? Rational(0) : dq.value()};
    };

    struct Node {
        int p, q;
        ExtRational dp, dq;
    };
    std::map<Key, int, KeyLess> id;
    std::vector<Node> order;
    Node init{da.initial(), db.initial(), Rational(0), Rational(0)};
    id.emplace(mk(init.p, init.dp, init.q, init.dq), 0);
    order.push_back(init);

    struct Edge {
        int from, symbol, to;
        Rational weight;
    };
    std::vector<Edge> edges;
    const Rational& lambda = a.lambda();

    for (std::size_t front = 0; front < order.size(); ++front) {
        Node cur = order[front];
        for (int s = 0; s < a.num_symbols(); ++s) {
            const Move& ma = da.moves(cur.p, s)[0];
            const Move& mb = db.moves(cur.q, s)[0];
            // candidate contribution of each operand to max(A,B)(u sigma)
            bool pa = !cur.dp.is_infinite(), pb = !cur.dq.is_infinite();
            Rational va = pa ? ma.weight - cur.dp.value() : Rational(0);
            Rational vb = pb ? mb.weight - cur.dq.value() : Rational(0);
            Rational c = pa && pb ? (va > vb ? va : vb) : (pa ? va : vb);
            auto deficit = [&](bool present, const Rational& v) {
                if (!present) return ExtRational::infinity();
                Rational d = lambda * (c - v);
                if (d > 0 && d >= clamp_at) return ExtRational::infinity();
                return ExtRational(d);
            };
            Node nxt{ma.to, mb.to, deficit(pa, va), deficit(pb, vb)};
            auto [it, inserted] = id.emplace(mk(nxt.p, nxt.dp, nxt.q, nxt.dq),
                                             static_cast<int>(order.size()));
            if (inserted) {
                if (order.size() >= cap)
                    throw CapExceededError("op_max_integral: state cap exceeded",
                                           order.size());
                order.push_back(nxt);
            }
            edges.push_back({static_cast<int>(front), s, it->second, c});
        }
    }

    AutomatonBuilder out;
    out.alphabet(a.alphabet());
    out.discount(lambda);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) names.push_back("m" + std::to_string(i));
    out.states(names);
    out.initial("m0");
    for (const auto& e : edges)
        out.transition(names[static_cast<std::size_t>(e.from)],
                       a.alphabet()[static_cast<std::size_t>(e.symbol)],
                       names[static_cast<std::size_t>(e.to)], e.weight);
    return out.build();
}

}  // namespace dsa
