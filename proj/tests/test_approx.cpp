#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsa/approx.hpp"
#include "dsa/errors.hpp"
#include "dsa/families.hpp"
#include "dsa/value.hpp"
#include "support.hpp"

using namespace dsa;
using testsup::constant_automaton;
using testsup::for_each_word;
using testsup::random_automaton;

namespace {

Rational half_pow(unsigned e) { return 1 / rational_pow(Rational(2), e); }

// single-state automaton with letter weights w0, w1 and the given lambda
Automaton two_letter(const Rational& lambda, const Rational& w0, const Rational& w1) {
    AutomatonBuilder b;
    b.alphabet({"a", "b"}).states({"s"}).initial("s").discount(lambda);
    b.transition("s", "a", "s", w0).transition("s", "b", "s", w1);
    return b.build();
}

}  // namespace

TEST_CASE("dyadic discount recognition") {
    CHECK(DyadicDiscount::from(make_rational(3, 2))->k == 1);
    CHECK(DyadicDiscount::from(make_rational(5, 4))->k == 2);
    CHECK(DyadicDiscount::from(make_rational(9, 8))->lambda() == make_rational(9, 8));
    CHECK_FALSE(DyadicDiscount::from(Rational(2)).has_value());
    CHECK_FALSE(DyadicDiscount::from(make_rational(5, 2)).has_value());
}

TEST_CASE("unfold_error_bound pins") {
    CHECK(unfold_error_bound(constant_automaton(7, 2), 3) == 0);  // m = 0
    CHECK(unfold_error_bound(two_letter(2, 0, 1), 1) == make_rational(1, 2));
    CHECK(unfold_error_bound(two_letter(make_rational(3, 2), 0, 1), 3) == make_rational(4, 9));
}

TEST_CASE("min_unfold_depth pins") {
    Automaton a = two_letter(make_rational(3, 2), 0, 1);  // m = 1, k = 1
    CHECK(min_unfold_depth(a, Precision{1}) == 3);
    Automaton b = two_letter(make_rational(5, 4), 0, 1);  // m = 1, k = 2
    CHECK(min_unfold_depth(b, Precision{2}) == 11);
    CHECK(min_unfold_depth(constant_automaton(5, make_rational(3, 2)), Precision{6}) == 0);
    CHECK_THROWS_AS(min_unfold_depth(two_letter(2, 0, 1), Precision{1}),
                    std::invalid_argument);

    // minimality on a sample
    for (unsigned p = 1; p <= 5; ++p) {
        unsigned l = min_unfold_depth(a, Precision{p});
        CHECK(unfold_error_bound(a, l) <= half_pow(p));
        if (l >= 2) CHECK(unfold_error_bound(a, l - 1) > half_pow(p));
    }
}

TEST_CASE("unfold exactness window and tail error") {
    std::mt19937 rng(31);
    testsup::RandomSpec spec;
    spec.states = 3;
    spec.lambda = make_rational(3, 2);
    spec.weights = {Rational(0), Rational(1), Rational(-1), make_rational(1, 2)};
    for (int i = 0; i < 15; ++i) {
        Automaton a = random_automaton(rng, spec);
        for (unsigned l = 1; l <= 3; ++l) {
            Automaton u = unfold(a, l);
            CHECK(u.validate().ok());
            Rational eb = unfold_error_bound(a, l);
            for_each_word(2, static_cast<int>(l) + 4, [&](const Word& w) {
                Rational diff = word_value(u, w) - word_value(a, w);
                if (w.size() <= l) {
                    CHECK(diff == 0);
                } else {
                    // finite-word difference stays within the bound plus the
                    // bracketing slack both tails allow
                    TailBounds ta = tail_bounds(a, w);
                    TailBounds tu = tail_bounds(u, w);
                    CHECK(tu.low <= ta.high + eb);
                    CHECK(tu.high >= ta.low - eb);
                }
            });
        }
    }
}

TEST_CASE("unfold guard") {
    Automaton a = two_letter(make_rational(3, 2), 0, 1);
    CHECK_THROWS_AS(unfold(a, 30, 1000), CapExceededError);
}

TEST_CASE("round_to_grid") {
    CHECK(round_to_grid(Rational(0), 1, 1) == 0);
    CHECK(round_to_grid(make_rational(3, 10), 1, 1) == make_rational(1, 2));
    CHECK(round_to_grid(make_rational(1, 4), 1, 1) == 0);  // tie rounds down
    CHECK(round_to_grid(make_rational(3, 4), 1, 1) == make_rational(1, 2));  // tie down
    CHECK(round_to_grid(make_rational(7, 8), 2, 3) == make_rational(7, 8));  // on grid
    CHECK_THROWS_AS(round_to_grid(Rational(-1), 1, 1), std::invalid_argument);
}

TEST_CASE("rounding determinization basics") {
    CHECK_THROWS_AS(approx_determinize_rounding(two_letter(2, 0, 1), Precision{2}),
                    std::invalid_argument);

    Automaton z = constant_automaton(0, make_rational(3, 2));
    DeterminizationResult r = approx_determinize_rounding(z, Precision{4});
    CHECK(r.automaton.num_states() == 1);
    for (const auto& t : r.automaton.transitions()) CHECK(t.weight == 0);
}

TEST_CASE("rounding precision and grid membership") {
    std::mt19937 rng(33);
    for (unsigned k = 1; k <= 3; ++k) {
        testsup::RandomSpec spec;
        spec.states = k == 3 ? 2 : 3;
        spec.lambda = 1 + half_pow(k);
        spec.weights = {Rational(0), Rational(1), make_rational(1, 2)};
        if (k <= 2) spec.weights.push_back(Rational(-1));
        for (unsigned p = 2; p <= 6; p += 2) {
            if (k == 3 && p == 6) continue;  // covered by the k=3, p<=4 runs
            Rational res = half_pow(p + k - 1);
            for (int i = 0; i < 4; ++i) {
                Automaton a = random_automaton(rng, spec);
                DeterminizationResult r = approx_determinize_rounding(a, Precision{p});
                CHECK(r.automaton.deterministic());
                CHECK(r.automaton.complete());
                for_each_word(2, 6, [&](const Word& w) {
                    Rational diff = word_value(r.automaton, w) - word_value(a, w);
                    if (diff < 0) diff = -diff;
                    CHECK(diff <= half_pow(p));
                });
                Rational imax = a.weight_span() * rational_pow(Rational(2), p + 2 * k);
                for (const auto& g : r.state_gaps)
                    for (const auto& e : g) {
                        if (e.is_infinite()) continue;
                        Rational idx = e.value() / res;
                        CHECK(idx.get_den() == 1);  // grid member
                        CHECK(idx <= imax);
                    }
            }
        }
    }
}

TEST_CASE("precision_lb sweep at p = 4") {
    Automaton a = precision_lb_family();
    DeterminizationResult r = approx_determinize_rounding(a, Precision{4});
    for_each_word(std::min(a.num_symbols(), 3), 5, [&](const Word& w) {
        Rational diff = word_value(r.automaton, w) - word_value(a, w);
        if (diff < 0) diff = -diff;
        CHECK(diff <= make_rational(1, 16));
    });
}
