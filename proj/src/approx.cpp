#include "dsa/approx.hpp"

#include <stdexcept>

#include "dsa/errors.hpp"
#include "dsa/value.hpp"
#include "subset.hpp"

namespace dsa {

Rational Precision::epsilon() const {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, p);
    return make_rational(1, den);
}

Rational DyadicDiscount::lambda() const {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return make_rational(den + 1, den);
}

std::optional<DyadicDiscount> DyadicDiscount::from(const Rational& lambda) {
    DiscountFactor d = DiscountFactor::from(lambda);
    if (!d.dyadic_k) return std::nullopt;
    return DyadicDiscount{*d.dyadic_k};
}

Automaton unfold(const Automaton& a, unsigned depth, std::size_t guard) {
    if (!a.complete()) throw std::invalid_argument("unfold: automaton must be complete");
    if (a.lambda() <= 1) throw std::invalid_argument("unfold: discount factor must exceed 1");

    // Tree size sum_{i<=l} |Sigma|^i, refused beyond the guard.
    std::size_t nsym = static_cast<std::size_t>(a.num_symbols());
    std::size_t total = 0, level = 1;
    for (unsigned i = 0;; ++i) {
        if (total > guard - level)
            throw CapExceededError("unfold: tree exceeds state guard", total);
        total += level;
        if (i == depth) break;
        if (level > guard / nsym)
            throw CapExceededError("unfold: tree exceeds state guard", total);
        level *= nsym;
    }

    Rational mid = (a.min_weight() + a.max_weight()) / 2;

    struct Node {
        CostVector scaled;   // lambda^{|w|} * cost(., w)
        Rational value;      // A(w), true scale
        unsigned depth;
        int id;
    };
    std::vector<Node> nodes;
    CostVector init = initial_cost_vector(a);
    nodes.push_back({init, Rational(0), 0, 0});

    AutomatonBuilder b;
    b.alphabet(a.alphabet());
    b.discount(a.lambda());
    auto name = [](int i) { return "u" + std::to_string(i); };
    b.add_state(name(0));
    b.initial(name(0));

    Rational inv_lambda = 1 / a.lambda();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Node cur = nodes[i];  // copy; nodes reallocates
        if (cur.depth == depth) {
            for (const auto& sym : a.alphabet())
                b.transition(name(cur.id), sym, name(cur.id), mid);
            continue;
        }
        Rational scale = rational_pow(inv_lambda, cur.depth + 1);
        for (int s = 0; s < a.num_symbols(); ++s) {
            CostVector next = cost_step(a, cur.scaled, s);
            ExtRational best = ExtRational::infinity();
            for (const auto& e : next) best = min(best, e);
            Rational val = best.value() * scale;  // A(w sigma); complete => finite
            int id = static_cast<int>(nodes.size());
            b.add_state(name(id));
            // weight chosen so the run value telescopes to A(w) within the tree
            b.transition(name(cur.id), a.alphabet()[static_cast<std::size_t>(s)], name(id),
                         (val - cur.value) * rational_pow(a.lambda(), cur.depth));
            nodes.push_back({std::move(next), val, cur.depth + 1, id});
        }
    }
    return b.build();
}

Rational unfold_error_bound(const Automaton& a, unsigned depth) {
    if (depth < 1) throw std::invalid_argument("unfold_error_bound: depth must be >= 1");
    Rational m = a.weight_span();
    return m / (2 * rational_pow(a.lambda(), depth - 1) * (a.lambda() - 1));
}

unsigned min_unfold_depth(const Automaton& a, Precision prec) {
    if (!DyadicDiscount::from(a.lambda()))
        throw std::invalid_argument("unfolding depth formula requires lambda = 1 + 2^{-k}");
    Rational m = a.weight_span();
    if (m == 0) return 0;
    // minimal l >= 1 with m / (2 lambda^{l-1} (lambda - 1)) <= 2^-p,
    // i.e. lambda^{l-1} >= m 2^p / (2 (lambda - 1)); exact iteration.
    Rational target = m * Rational(Integer(1) << prec.p) / (2 * (a.lambda() - 1));
    Rational pow = 1;
    unsigned l = 1;
    while (pow < target) {
        pow *= a.lambda();
        ++l;
    }
    return l;
}

Rational round_to_grid(const Rational& x, unsigned p, unsigned k) {
    if (x < 0) throw std::invalid_argument("round_to_grid: gaps are nonnegative");
    Integer res_den;
    mpz_ui_pow_ui(res_den.get_mpz_t(), 2, p + k - 1);
    // i = ceil(x * res_den - 1/2): nearest grid index, exact ties downward
    Rational q = x * Rational(res_den);
    Integer num2 = 2 * q.get_num() - q.get_den();
    Integer den2 = 2 * q.get_den();
    Integer i;
    mpz_cdiv_q(i.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return make_rational(i, res_den);
}

DeterminizationResult approx_determinize_rounding(const Automaton& a, Precision prec,
                                                  std::size_t cap) {
    auto dy = DyadicDiscount::from(a.lambda());
    if (!dy)
        throw std::invalid_argument(
            "gap rounding requires a discount factor of the form 1 + 2^{-k}");
    unsigned k = dy->k, p = prec.p;
    Rational m = a.weight_span();
    Rational clamp_at = m * Rational(Integer(1) << (k + 1));
    std::function<Rational(const Rational&)> round = [p, k](const Rational& x) {
        return round_to_grid(x, p, k);
    };
    DeterminizationResult res =
        subset_construct(a, cap, clamp_at, &round, "rounding construction exceeded cap");

    // Reported bound 2^{n (p + 2k + ceil(log2(ceil(m))))}, display-only.
    unsigned long logm = 0;
    if (m > 1) {
        Integer mc = m.get_num() / m.get_den() + (m.get_den() == 1 ? 0 : 1);
        logm = mpz_sizeinbase(mc.get_mpz_t(), 2);
        if (mpz_popcount(mc.get_mpz_t()) == 1) --logm;  // exact power of two
    }
    unsigned long expo =
        static_cast<unsigned long>(a.num_states()) * (p + 2ul * k + logm);
    if (expo <= 4096) {
        Integer bound = Integer(1) << expo;
        res.stats.state_bound = bound;
    }
    return res;
}

}  // namespace dsa
