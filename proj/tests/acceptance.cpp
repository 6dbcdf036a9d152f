// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dsa/algebra.hpp"
#include "dsa/analysis.hpp"
#include "dsa/approx.hpp"
#include "dsa/determinize.hpp"
#include "dsa/errors.hpp"
#include "dsa/families.hpp"
#include "dsa/io.hpp"
#include "dsa/value.hpp"
#include "support.hpp"

using namespace dsa;
using testsup::for_each_word;
using testsup::random_automaton;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

Rational half_pow(unsigned e) { return 1 / rational_pow(Rational(2), e); }

// Sound version of the termination bound: gap values form
// {lambda c / d : c < 2m/lambda} plus infinity, so each of the n vector
// entries ranges over ceil(2m/lambda) + 1 values.
Integer sound_state_bound(const Automaton& a) {
    Integer m = a.gap_granularity();
    Integer lam = a.lambda().get_num();
    Integer per_entry = (2 * m + lam - 1) / lam + 1;
    Integer bound = 1;
    for (int i = 0; i < a.num_states(); ++i) bound *= per_entry;
    return bound;
}

void criteria_1_2() {
    std::mt19937 rng(101);
    testsup::RandomSpec spec;
    spec.weights = {Rational(0), Rational(1),           make_rational(1, 2),
                    Rational(-1), make_rational(-1, 3), make_rational(2, 3)};
    std::uniform_int_distribution<int> states_d(2, 4), letters_d(2, 3), lambda_d(2, 3);
    bool values_ok = true, bound_ok = true;
    int cases = 0;
    std::string detail1, detail2;
    for (int i = 0; i < 500; ++i) {
        spec.states = states_d(rng);
        spec.letters = letters_d(rng);
        spec.lambda = lambda_d(rng);
        Automaton a = random_automaton(rng, spec);
        DeterminizationResult r = determinize_exact(a);
        for_each_word(spec.letters, 6, [&](const Word& w) {
            if (values_ok && word_value(r.automaton, w) != brute_force_value(a, w)) {
                values_ok = false;
                detail1 = "value mismatch on case " + std::to_string(i);
            }
        });
        if (bound_ok && Integer(r.stats.states_created) > sound_state_bound(a)) {
            bound_ok = false;
            detail2 = "bound exceeded on case " + std::to_string(i);
        }
        ++cases;
    }
    report(1, "exact determinization equals the brute-force oracle on 500 random "
              "integral-factor automata, all words up to length 6",
           values_ok && cases == 500, detail1);
    report(2, "states created never exceed the per-entry gap-value count to the n-th power",
           bound_ok, detail2);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    for (unsigned k = 4; k <= 8; k += 2) {
        std::size_t n = determinize_exact(weight_lb_family(2, k)).stats.states_created;
        if (n < k - 2) {
            ok = false;
            detail = "k=" + std::to_string(k) + " gave " + std::to_string(n) + " states";
        }
    }
    report(3, "determinizing the weight family (lambda=2, k in {4,6,8}) needs at least "
              "k-2 states", ok, detail);
}

void criterion_4() {
    std::size_t n = determinize_exact(combined_lb_family(2, 2, 2)).stats.states_created;
    report(4, "determinizing the combined family (lambda=2, k=2, l=2) needs at least "
              "k^l = 4 states", n >= 4, std::to_string(n) + " states");
}

void criterion_5() {
    Automaton a = nondeterminizable_family(5, 2);
    bool capped = false;
    try {
        determinize_exact(a, 10'000);
    } catch (const CapExceededError&) {
        capped = true;
    }
    auto [w, gaps] = nondeterminizable_witness(a, 5, 2, 100);
    bool distinct = true;
    for (std::size_t i = 0; i < gaps.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < gaps.size(); ++j)
            if (gaps[i] == gaps[j]) {
                distinct = false;
                break;
            }
    report(5, "the non-integral factor 5/2 automaton exceeds a 10^4 state cap and its "
              "greedy word shows 100 pairwise distinct gaps", capped && distinct);
}

void criterion_6() {
    std::mt19937 rng(106);
    bool ok = true;
    int cases = 0;
    std::string detail;
    for (unsigned k = 1; k <= 2 && ok; ++k)
        for (unsigned p = 2; p <= 6 && ok; p += 2) {
            testsup::RandomSpec spec;
            spec.states = 3;
            spec.lambda = 1 + half_pow(k);
            spec.weights = {Rational(0), Rational(1), make_rational(1, 2)};
            for (int i = 0; i < 17 && ok; ++i) {
                Automaton a = random_automaton(rng, spec);
                DeterminizationResult r = approx_determinize_rounding(a, Precision{p});
                for_each_word(2, 6, [&](const Word& w) {
                    Rational diff = word_value(r.automaton, w) - word_value(a, w);
                    if (diff < 0) diff = -diff;
                    if (diff > half_pow(p)) ok = false;
                });
                if (!ok) detail = "precision violated";
                // states_created <= 2^{n (p + 2k + ceil(log2 ceil(m)))}
                Rational m = a.weight_span();
                unsigned logm = 0;
                Integer mc = (m.get_num() + m.get_den() - 1) / m.get_den();
                while ((Integer(1) << logm) < mc) ++logm;
                unsigned expo =
                    static_cast<unsigned>(a.num_states()) * (p + 2 * k + logm);
                if (expo <= 62 &&
                    Integer(r.stats.states_created) > (Integer(1) << expo)) {
                    ok = false;
                    detail = "state bound violated";
                }
                ++cases;
            }
        }
    report(6, "gap rounding stays within 2^-p on all words up to length 6 and within the "
              "published state bound (102 random automata, k in {1,2}, p in {2,4,6})",
           ok && cases >= 100, detail);
}

void criterion_7() {
    std::mt19937 rng(107);
    bool ok = true;
    std::string detail;
    testsup::RandomSpec spec;
    spec.states = 3;
    spec.lambda = make_rational(3, 2);
    spec.weights = {Rational(0), Rational(1), make_rational(-1, 2)};
    for (int i = 0; i < 10 && ok; ++i) {
        Automaton a = random_automaton(rng, spec);
        for (unsigned l = 1; l <= 3 && ok; ++l) {
            Automaton u = unfold(a, l);
            Rational eb = unfold_error_bound(a, l);
            for_each_word(2, static_cast<int>(l) + 4, [&](const Word& w) {
                Rational diff = word_value(u, w) - word_value(a, w);
                if (diff < 0) diff = -diff;
                if (w.size() <= l) {
                    if (diff != 0) ok = false;
                } else {
                    // finite-word values may drift, but only within the bound
                    // plus what the two tails can still change
                    TailBounds ta = tail_bounds(a, w), tu = tail_bounds(u, w);
                    if (tu.low > ta.high + eb || tu.high < ta.low - eb) ok = false;
                }
            });
            if (!ok) detail = "window or error bound violated at depth " + std::to_string(l);
        }
    }
    AutomatonBuilder b;
    b.alphabet({"a", "b"}).states({"s"}).initial("s").discount(make_rational(3, 2));
    b.transition("s", "a", "s", 0).transition("s", "b", "s", 1);
    if (min_unfold_depth(b.build(), Precision{1}) != 3) {
        ok = false;
        detail = "minimal depth for (m=1, k=1, p=1) is not 3";
    }
    report(7, "unfolding is exact up to its depth, within the error bound beyond it, and "
              "the minimal depth formula gives 3 for (m=1, k=1, p=1)", ok, detail);
}

void criterion_8() {
    bool ok = true;
    for (unsigned k = 1; k <= 16 && ok; ++k) {
        Integer K = Integer(1) << k;
        Rational base = make_rational(K + 1, K);
        Rational powK = rational_pow(base, K.get_ui());
        // 2 < (1+1/K)^K < 3; the log form 1 < K log2(1+1/K) < 3/2 is the
        // same lower inequality plus (1+1/K)^{2K} < 2^3
        if (!(powK > 2 && powK < 3)) ok = false;
        if (!(powK * powK < 8)) ok = false;
    }
    report(8, "exact rational half-life bounds 2 < (1+1/K)^K < 3 and "
              "1 < K log2(1+1/K) < 3/2 for K = 2^1 .. 2^16", ok);
}

void criterion_9() {
    std::mt19937 rng(109);
    testsup::RandomSpec nd;
    nd.states = 2;
    nd.weights = {Rational(0), Rational(1), make_rational(1, 2), Rational(-1)};
    testsup::RandomSpec det = nd;
    det.deterministic = true;
    bool ok = true;
    int instances = 0;
    std::string detail;
    for (int i = 0; i < 90 && ok; ++i) {
        Automaton a = random_automaton(rng, nd), b = random_automaton(rng, nd);
        Automaton d1 = random_automaton(rng, det), d2 = random_automaton(rng, det);
        Automaton omin = op_min(a, b), oadd = op_add(a, b);
        Automaton oscale = op_scale(a, make_rational(3, 2));
        Automaton osub = op_sub(d1, d2), oneg = op_neg(d1);
        Automaton omax = op_max_integral(a, b);
        for_each_word(2, 5, [&](const Word& w) {
            Rational va = brute_force_value(a, w), vb = brute_force_value(b, w);
            if (word_value(omin, w) != (va < vb ? va : vb)) ok = false;
            if (word_value(oadd, w) != va + vb) ok = false;
            if (word_value(oscale, w) != make_rational(3, 2) * va) ok = false;
            if (word_value(osub, w) != word_value(d1, w) - word_value(d2, w)) ok = false;
            if (word_value(oneg, w) != -word_value(d1, w)) ok = false;
            if (word_value(omax, w) != (va > vb ? va : vb)) ok = false;
        });
        if (!ok) detail = "oracle mismatch on case " + std::to_string(i);
        instances += 6;
    }
    // forbidden cells
    AutomatonBuilder b2;
    b2.alphabet({"a"}).states({"p", "q"}).initial("p").discount(2);
    b2.transition("p", "a", "p", 0).transition("p", "a", "q", 1);
    b2.transition("q", "a", "q", 0);
    Automaton nondet = b2.build();
    bool rejects = false;
    try {
        op_neg(nondet);
    } catch (const std::invalid_argument&) {
        try {
            op_max_integral(nondeterminizable_family(5, 2), nondeterminizable_family(5, 2));
        } catch (const std::invalid_argument&) {
            rejects = true;
        }
    }
    report(9, "all six closure operations match pointwise oracle arithmetic on 540 random "
              "instances and the forbidden cells are rejected",
           ok && rejects && instances >= 500, detail);
}

void criterion_10() {
    std::mt19937 rng(110);
    bool ok = true;
    std::string detail;
    for (unsigned p = 2; p <= 4 && ok; ++p) {
        Rational eps = half_pow(p);
        testsup::RandomSpec nd;
        nd.states = 2;
        nd.weights = {Rational(0), Rational(1), make_rational(1, 2)};
        for (int i = 0; i < 50 && ok; ++i) {
            Automaton a = random_automaton(rng, nd);
            if (!approx_compare_geq(a, a, Precision{p}).yes) ok = false;
            if (approx_compare_geq(a, shift_constant(a, 2 * eps), Precision{p}).yes)
                ok = false;
        }
        testsup::RandomSpec dy = nd;
        dy.lambda = make_rational(3, 2);
        for (int i = 0; i < 20 && ok; ++i) {
            Automaton a = random_automaton(rng, dy);
            if (!approx_compare_geq(a, a, Precision{p}).yes) ok = false;
            if (approx_compare_geq(a, shift_constant(a, 2 * eps), Precision{p}).yes)
                ok = false;
        }
        if (!ok) detail = "p=" + std::to_string(p);
    }
    report(10, "comparison answers yes on (a, a) and no on (a, a + 2 epsilon) for 50 "
               "integral and 20 dyadic random automata, p in {2,3,4}", ok, detail);
}

void criterion_11() {
    std::mt19937 rng(111);
    testsup::RandomSpec det;
    det.deterministic = true;
    det.states = 4;
    det.letters = 3;
    det.weights = {Rational(0), Rational(1), Rational(-1), make_rational(1, 2)};
    bool ok = true;
    int cases = 0;
    for (int i = 0; i < 200 && ok; ++i) {
        Automaton a = random_automaton(rng, det);
        Valuation v = sup_value(a);
        // exhaustive policy enumeration
        int n = a.num_states(), s = a.num_symbols();
        std::vector<int> pol(static_cast<std::size_t>(n), 0);
        bool have = false;
        Rational best = 0;
        std::function<void(int)> rec = [&](int q) {
            if (q == n) {
                std::vector<int> seen(static_cast<std::size_t>(n), -1);
                Rational sum = 0, scale = 1;
                std::vector<Rational> acc;
                int cur = a.initial(), pos = 0;
                std::vector<int> path;
                while (seen[static_cast<std::size_t>(cur)] < 0) {
                    seen[static_cast<std::size_t>(cur)] = pos++;
                    path.push_back(cur);
                    acc.push_back(sum);
                    const auto& mv = a.moves(cur, pol[static_cast<std::size_t>(cur)]);
                    sum += scale * mv[0].weight;
                    scale /= a.lambda();
                    cur = mv[0].to;
                }
                int start = seen[static_cast<std::size_t>(cur)];
                Rational prefix = acc[static_cast<std::size_t>(start)];
                Rational lam_l = rational_pow(a.lambda(),
                                              path.size() - static_cast<std::size_t>(start));
                Rational total = prefix + (sum - prefix) / (1 - 1 / lam_l);
                if (!have || total > best) best = total;
                have = true;
                return;
            }
            for (int l = 0; l < s; ++l) {
                pol[static_cast<std::size_t>(q)] = l;
                rec(q + 1);
            }
        };
        rec(0);
        if (v.values[static_cast<std::size_t>(a.initial())] != best) ok = false;
        // zero Bellman residual
        for (int q = 0; q < n && ok; ++q) {
            bool attained = false;
            for (int l = 0; l < s; ++l) {
                const auto& mv = a.moves(q, l);
                Rational cand =
                    mv[0].weight + v.values[static_cast<std::size_t>(mv[0].to)] / a.lambda();
                if (cand > v.values[static_cast<std::size_t>(q)]) ok = false;
                if (cand == v.values[static_cast<std::size_t>(q)]) attained = true;
            }
            if (!attained) ok = false;
        }
        ++cases;
    }
    report(11, "policy iteration equals exhaustive policy enumeration with zero Bellman "
               "residual on 200 random deterministic automata", ok && cases >= 200);
}

void criterion_12() {
    std::vector<FamilySpec> sweep;
    auto add = [&](const std::string& name, std::map<std::string, Rational> p) {
        sweep.push_back({name, std::move(p)});
    };
    for (unsigned k = 3; k <= 8; ++k) add("weight_lb", {{"lambda", 2}, {"k", k}});
    add("weight_lb", {{"lambda", 3}, {"k", 8}});
    for (unsigned l = 1; l <= 3; ++l) add("combined_lb", {{"lambda", 2}, {"k", 2}, {"l", l}});
    add("nondeterminizable", {{"h", 5}, {"k", 2}});
    add("nondeterminizable", {{"h", 7}, {"k", 3}});
    add("incomplete_b", {{"lambda", 2}});
    add("precision_lb", {{"l", 6}});
    for (unsigned k = 1; k <= 4; ++k) add("discount_lb", {{"k", k}});
    for (unsigned n = 2; n <= 6; ++n) add("statecount_lb", {{"n", n}});
    add("nomax_pair", {{"k", 4}});
    add("last_by_k", {{"lambda", 2}, {"k", 2}});
    add("last_by_k", {{"lambda", 2}, {"k", 3}});
    bool ok = true;
    std::string detail;
    for (const auto& fs : sweep) {
        PropertyReport r = family_properties(fs);
        if (!r.ok()) {
            ok = false;
            detail = fs.name + ": " + r.failures.front();
            break;
        }
    }
    report(12, "every family generator passes its proof-pinned property checks across the "
               "parameter sweep (including the i/2^l precision grid up to l = 6)", ok, detail);

    // monotone-growth spot check standing in for the asymptotic lower bounds
    bool growth = true;
    std::size_t prev = 0;
    for (unsigned k = 1; k <= 3; ++k) {
        std::size_t n =
            approx_determinize_rounding(discount_lb_family(k), Precision{3}).stats.states_created;
        if (n <= prev) growth = false;
        prev = n;
    }
    report(12, "spot check: rounding-determinization state counts strictly grow with k for "
               "the discount family at fixed precision", growth);
}

}  // namespace

int main() {
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures > 0) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
