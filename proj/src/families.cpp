#include "dsa/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "dsa/analysis.hpp"
#include "dsa/determinize.hpp"
#include "dsa/value.hpp"

namespace dsa {
namespace {

std::string rstr(const Rational& r) { return to_string(r); }

// Star automaton: q_in branches once into a zero trap q1 and a mirror q2
// that echoes the numeric letters as weights; the shape behind most of the
// lower-bound families.
Automaton star_automaton(const std::vector<Rational>& letters, const Rational& lambda) {
    AutomatonBuilder b;
    std::vector<std::string> names;
    for (const auto& v : letters) names.push_back(rstr(v));
    b.alphabet(names);
    b.states({"q_in", "q1", "q2"});
    b.initial("q_in");
    b.discount(lambda);
    for (const auto& v : letters) {
        b.transition("q_in", rstr(v), "q1", 0);
        b.transition("q1", rstr(v), "q1", 0);
        b.transition("q_in", rstr(v), "q2", v);
        b.transition("q2", rstr(v), "q2", v);
    }
    return b.build();
}

unsigned req_uint(const FamilySpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end())
        throw std::invalid_argument("family " + s.name + ": missing parameter '" + key + "'");
    if (it->second.get_den() != 1 || it->second < 0)
        throw std::invalid_argument("family " + s.name + ": parameter '" + key +
                                    "' must be a nonnegative integer");
    return static_cast<unsigned>(it->second.get_num().get_ui());
}

unsigned opt_uint(const FamilySpec& s, const std::string& key, unsigned dflt) {
    return s.params.count(key) ? req_uint(s, key) : dflt;
}

}  // namespace

Automaton weight_lb_family(unsigned lambda, unsigned k) {
    if (lambda < 2) throw std::invalid_argument("weight_lb: lambda must be an integer >= 2");
    if (k <= lambda) throw std::invalid_argument("weight_lb: requires k > lambda");
    std::vector<Rational> letters;
    letters.push_back(1);
    for (unsigned v = 0; v < lambda; ++v) letters.push_back(-Rational(v));
    letters.push_back(-Rational(k));
    return star_automaton(letters, Rational(lambda));
}

Automaton nondeterminizable_family(unsigned h, unsigned k) {
    if (k == 0 || h <= k) throw std::invalid_argument("nondeterminizable: requires h > k >= 1");
    if (h % k == 0) throw std::invalid_argument("nondeterminizable: lambda = h/k must be nonintegral");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("nondeterminizable: h, k must be coprime");
    std::vector<Rational> letters;
    for (unsigned j = 0; j * k < h; ++j) letters.push_back(-Rational(j * k));
    letters.push_back(-Rational(h));
    letters.push_back(Rational(k));
    return star_automaton(letters, make_rational(h, k));
}

Automaton combined_lb_family(unsigned lambda, unsigned k, unsigned l) {
    if (lambda < 2) throw std::invalid_argument("combined_lb: lambda must be an integer >= 2");
    if (k < 1 || l < 1) throw std::invalid_argument("combined_lb: requires k, l >= 1");
    // letters: l-tuples over {-lambda k, ..., 1}, components joined with '|'
    long lo = -static_cast<long>(lambda * k);
    std::size_t range = static_cast<std::size_t>(1 - lo) + 1;
    double size = 1;
    for (unsigned i = 0; i < l; ++i) size *= static_cast<double>(range);
    if (size > 250000) throw std::invalid_argument("combined_lb: alphabet too large");

    std::vector<std::vector<long>> tuples;
    std::vector<long> cur(l, lo);
    for (;;) {
        tuples.push_back(cur);
        unsigned i = 0;
        while (i < l && cur[i] == 1) cur[i++] = lo;
        if (i == l) break;
        ++cur[i];
    }
    auto tname = [&](const std::vector<long>& t) {
        std::string s;
        for (unsigned i = 0; i < l; ++i) {
            if (i) s += "|";
            s += std::to_string(t[i]);
        }
        return s;
    };

    AutomatonBuilder b;
    std::vector<std::string> names;
    for (const auto& t : tuples) names.push_back(tname(t));
    b.alphabet(names);
    std::vector<std::string> states = {"q_in", "q0"};
    for (unsigned i = 1; i <= l; ++i) states.push_back("q" + std::to_string(i));
    b.states(states);
    b.initial("q_in");
    b.discount(Rational(lambda));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        b.transition("q_in", names[t], "q0", 0);
        b.transition("q0", names[t], "q0", 0);
        for (unsigned i = 1; i <= l; ++i) {
            b.transition("q_in", names[t], "q" + std::to_string(i), 0);
            b.transition("q" + std::to_string(i), names[t], "q" + std::to_string(i),
                         Rational(tuples[t][i - 1]));
        }
    }
    return b.build();
}

Automaton last_by_k_family(const Rational& lambda, unsigned k) {
    if (k < 1) throw std::invalid_argument("last_by_k: requires k >= 1");
    if (lambda <= 1) throw std::invalid_argument("last_by_k: requires lambda > 1");
    AutomatonBuilder b;
    b.alphabet({"a", "b", "#"});
    std::vector<std::string> states = {"q0"};
    for (unsigned i = 1; i <= k; ++i) states.push_back("c" + std::to_string(i));
    states.push_back("sink");
    b.states(states);
    b.initial("q0");
    b.discount(lambda);
    b.transition("q0", "a", "q0", 0);
    b.transition("q0", "b", "q0", 0);
    b.transition("q0", "#", "sink", 0);  // no guesses past the first '#'
    b.transition("q0", "a", "c1", 0);    // guess: this 'a' is k-th from the end
    for (unsigned i = 1; i <= k; ++i) {
        std::string ci = "c" + std::to_string(i);
        std::string nxt = i < k ? "c" + std::to_string(i + 1) : "sink";
        b.transition(ci, "a", nxt, 0);
        b.transition(ci, "b", nxt, 0);
        b.transition(ci, "#", "sink", i == k ? Rational(-1) : Rational(0));
    }
    for (const char* s : {"a", "b", "#"}) b.transition("sink", s, "sink", 0);
    return b.build();
}

Automaton incomplete_b_family(unsigned lambda) {
    if (lambda < 2) throw std::invalid_argument("incomplete_b: lambda must be an integer >= 2");
    Rational lam(lambda);
    AutomatonBuilder b;
    b.alphabet({"a", "b"});
    b.states({"q_in", "q1", "q2"});
    b.initial("q_in");
    b.discount(lam);
    b.transition("q_in", "a", "q1", 0);
    b.transition("q1", "a", "q1", 0);  // q1 deliberately has no 'b' move
    b.transition("q_in", "a", "q2", (lam + 1) / lam);
    b.transition("q2", "a", "q2", 1 / lam);
    b.transition("q2", "b", "q2", 0);
    b.transition("q_in", "b", "q2", 0);
    return b.build();
}

Automaton precision_lb_family() {
    std::vector<Rational> letters = {Rational(0),
                                     make_rational(1, 3),
                                     make_rational(2, 3),
                                     make_rational(-1, 3),
                                     make_rational(-2, 3),
                                     Rational(-1)};
    return star_automaton(letters, make_rational(3, 2));
}

Automaton discount_lb_family(unsigned k) {
    if (k < 1) throw std::invalid_argument("discount_lb: requires k >= 1");
    Integer K = Integer(1) << k;
    return star_automaton({Rational(1), Rational(0), Rational(-1)},
                          make_rational(K + 1, K));
}

Automaton statecount_lb_family(unsigned n, unsigned k) {
    if (n < 1) throw std::invalid_argument("statecount_lb: requires n >= 1");
    if (k < 1) throw std::invalid_argument("statecount_lb: requires k >= 1");
    Integer K = Integer(1) << k;
    Rational lam = make_rational(K + 1, K);
    // the bit-threshold pin cost > 1/3 needs lambda^{n-1} < 3
    if (rational_pow(lam, n - 1) >= 3)
        throw std::invalid_argument("statecount_lb: requires lambda^{n-1} < 3 (k too small for n)");
    AutomatonBuilder b;
    std::vector<std::string> letters = {"0"};
    for (unsigned i = 1; i <= n; ++i) letters.push_back("1_" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) letters.push_back("-1_" + std::to_string(i));
    b.alphabet(letters);
    std::vector<std::string> states = {"q_in", "q0"};
    for (unsigned i = 1; i <= n; ++i) states.push_back("q" + std::to_string(i));
    b.states(states);
    b.initial("q_in");
    b.discount(lam);
    auto wt = [&](const std::string& letter, unsigned i) -> Rational {
        if (letter == "1_" + std::to_string(i)) return 1;
        if (letter == "-1_" + std::to_string(i)) return -1;
        return 0;
    };
    for (const auto& s : letters) {
        b.transition("q_in", s, "q0", 0);
        b.transition("q0", s, "q0", 0);
        for (unsigned i = 1; i <= n; ++i) {
            b.transition("q_in", s, "q" + std::to_string(i), wt(s, i));
            b.transition("q" + std::to_string(i), s, "q" + std::to_string(i), wt(s, i));
        }
    }
    return b.build();
}

std::pair<Automaton, Automaton> nomax_pair_family() {
    Rational lam = make_rational(5, 2);
    std::vector<Rational> letters = {Rational(0),         make_rational(2, 5),
                                     make_rational(-1, 8), make_rational(-1, 4),
                                     make_rational(-1, 2), Rational(-1)};
    std::vector<std::string> names;
    for (const auto& v : letters) names.push_back(rstr(v));
    AutomatonBuilder ba;
    ba.alphabet(names).states({"q"}).initial("q").discount(lam);
    for (const auto& s : names) ba.transition("q", s, "q", 0);
    AutomatonBuilder bb;
    bb.alphabet(names).states({"q"}).initial("q").discount(lam);
    for (std::size_t i = 0; i < letters.size(); ++i)
        bb.transition("q", names[i], "q", letters[i]);
    return {ba.build(), bb.build()};
}

std::vector<Automaton> generate(const FamilySpec& spec) {
    if (spec.name == "weight_lb")
        return {weight_lb_family(opt_uint(spec, "lambda", 2), req_uint(spec, "k"))};
    if (spec.name == "combined_lb")
        return {combined_lb_family(opt_uint(spec, "lambda", 2), req_uint(spec, "k"),
                                   req_uint(spec, "l"))};
    if (spec.name == "nondeterminizable")
        return {nondeterminizable_family(req_uint(spec, "h"), req_uint(spec, "k"))};
    if (spec.name == "last_by_k") {
        Rational lam = spec.params.count("lambda") ? spec.params.at("lambda") : Rational(2);
        return {last_by_k_family(lam, req_uint(spec, "k"))};
    }
    if (spec.name == "incomplete_b")
        return {incomplete_b_family(opt_uint(spec, "lambda", 2))};
    if (spec.name == "precision_lb") return {precision_lb_family()};
    if (spec.name == "discount_lb") return {discount_lb_family(req_uint(spec, "k"))};
    if (spec.name == "statecount_lb")
        return {statecount_lb_family(req_uint(spec, "n"), opt_uint(spec, "k", 4))};
    if (spec.name == "nomax_pair") {
        auto [a, b] = nomax_pair_family();
        return {a, b};
    }
    throw std::invalid_argument("unknown family '" + spec.name + "'");
}

Word weight_lb_witness(const Automaton& a, unsigned lambda, unsigned x) {
    if (x < 1) throw std::invalid_argument("weight_lb_witness: x >= 1");
    // u_1 = <1>; u_x = u_y . <x - lambda y> with y = ceil(x / lambda), so the
    // appended digit lies in {-lambda+1, ..., 0} (all alphabet letters).
    // Along these words gap(q2, u_x) = lambda * x.
    std::vector<long> letters;
    long xx = static_cast<long>(x), lam = static_cast<long>(lambda);
    while (xx > 1) {
        long y = (xx + lam - 1) / lam;
        letters.push_back(xx - lam * y);
        xx = y;
    }
    letters.push_back(1);
    std::reverse(letters.begin(), letters.end());
    Word w;
    for (long v : letters) {
        int s = a.symbol_index(std::to_string(v));
        if (s < 0) throw std::invalid_argument("weight_lb_witness: letter out of range");
        w.push_back(s);
    }
    return w;
}

std::pair<Word, std::vector<Rational>> nondeterminizable_witness(const Automaton& a,
                                                                 unsigned h, unsigned k,
                                                                 unsigned n) {
    Word w;
    std::vector<Rational> gaps;
    Rational lam = make_rational(h, k);
    auto push = [&](long v) {
        int s = a.symbol_index(std::to_string(v));
        if (s < 0) throw std::invalid_argument("nondeterminizable_witness: letter missing");
        w.push_back(s);
    };
    // first letter 'k' gives gap h; then greedily subtract multiples of k,
    // keeping the gap in [0, h] forever: g' = lambda (g - jk), j = floor(g/k)
    Rational g = 0;
    push(static_cast<long>(k));
    g = lam * (g + Rational(k));
    gaps.push_back(g);
    for (unsigned i = 1; i < n; ++i) {
        Integer j = g.get_num() / (g.get_den() * k);  // floor(g / k), g >= 0
        long jk = static_cast<long>(j.get_ui()) * static_cast<long>(k);
        long v = jk < static_cast<long>(h) ? -jk : -static_cast<long>(h);
        push(v);
        g = lam * (g + Rational(v));
        gaps.push_back(g);
    }
    return {w, gaps};
}

std::vector<Word> precision_lb_witnesses(const Automaton& a, unsigned l) {
    // level DP on exact gaps: words whose q2-gap is i / 2^level; every level
    // extends the previous one by a single letter
    Rational lam = a.lambda();
    struct Entry {
        Word word;
        Rational g;  // gap(q2, word)
    };
    std::vector<Entry> cur;
    // level 1: single letters
    auto grid_index = [](const Rational& g, unsigned level) -> long {
        Rational scaled = g * Rational(Integer(1) << level);
        if (scaled.get_den() != 1 || scaled < 0) return -1;
        if (scaled.get_num() > 4 * (Integer(1) << level)) return -1;  // keep DP small
        return static_cast<long>(scaled.get_num().get_si());
    };
    for (int s = 0; s < a.num_symbols(); ++s) {
        Word w{s};
        ExtRational g = gap(a, a.state_index("q2"), w);
        if (g.is_infinite() || g.value() < 0) continue;
        if (grid_index(g.value(), 1) >= 0) cur.push_back({w, g.value()});
    }
    for (unsigned level = 2; level <= l; ++level) {
        std::vector<Entry> next;
        std::set<long> seen;
        for (const auto& e : cur)
            for (int s = 0; s < a.num_symbols(); ++s) {
                Word w = e.word;
                w.push_back(s);
                ExtRational g = gap(a, a.state_index("q2"), w);
                if (g.is_infinite()) continue;
                long idx = grid_index(g.value(), level);
                if (idx < 0 || seen.count(idx)) continue;
                seen.insert(idx);
                next.push_back({w, g.value()});
            }
        cur = std::move(next);
    }
    // order by grid index, keep i <= 2^l
    Integer lim = Integer(1) << l;
    std::vector<Word> out(static_cast<std::size_t>(lim.get_ui()) + 1);
    std::vector<bool> have(out.size(), false);
    for (const auto& e : cur) {
        long idx = grid_index(e.g, l);
        if (idx >= 0 && idx < static_cast<long>(out.size()) &&
            !have[static_cast<std::size_t>(idx)]) {
            out[static_cast<std::size_t>(idx)] = e.word;
            have[static_cast<std::size_t>(idx)] = true;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!have[i])
            throw std::invalid_argument("precision_lb: gap " + std::to_string(i) + "/2^" +
                                        std::to_string(l) + " not realized");
    return out;
}

std::vector<Word> nomax_witnesses(const Automaton& b, unsigned k) {
    if (k < 3) throw std::invalid_argument("nomax_witnesses: requires k >= 3");
    Rational lam = b.lambda();
    auto scaled_value = [&](const Word& w) -> Rational {
        return rational_pow(lam, w.size()) * word_value(b, w);
    };
    // level-k grid: value = 5 j / 2^k; intermediates allowed up to j <= 3*2^k/5
    auto index_at = [&](const Rational& v, unsigned level) -> long {
        Rational scaled = v * Rational(Integer(1) << level) / 5;
        if (scaled.get_den() != 1 || scaled < 0) return -1;
        Integer lim = 3 * (Integer(1) << level) / 5;
        if (scaled.get_num() > lim) return -1;
        return static_cast<long>(scaled.get_num().get_si());
    };
    // base level 3: breadth-first enumeration of short words
    std::map<long, Word> cur;
    std::vector<Word> frontier{{}};
    for (unsigned len = 1; len <= 5 && frontier.size() < 100000; ++len) {
        std::vector<Word> nf;
        for (const auto& w : frontier)
            for (int s = 0; s < b.num_symbols(); ++s) {
                Word ww = w;
                ww.push_back(s);
                long idx = index_at(scaled_value(ww), 3);
                if (idx >= 0 && !cur.count(idx)) cur.emplace(idx, ww);
                nf.push_back(std::move(ww));
            }
        frontier = std::move(nf);
    }
    cur.emplace(0, Word{b.symbol_index("0")});  // u_{0,k} = <0> always works
    for (unsigned level = 4; level <= k; ++level) {
        std::map<long, Word> next;
        for (const auto& [j, w] : cur)
            for (int s = 0; s < b.num_symbols(); ++s) {
                Word ww = w;
                ww.push_back(s);
                long idx = index_at(scaled_value(ww), level);
                if (idx >= 0 && !next.count(idx)) next.emplace(idx, std::move(ww));
            }
        next.emplace(0, Word{b.symbol_index("0")});
        cur = std::move(next);
    }
    Integer req = ((Integer(1) << k) + 4) / 5;  // ceil(2^k / 5)
    std::vector<Word> out;
    for (Integer j = 0; j <= req; ++j) {
        auto it = cur.find(static_cast<long>(j.get_si()));
        if (it == cur.end())
            throw std::invalid_argument("nomax: gap 5*" + j.get_str() + "/2^" +
                                        std::to_string(k) + " not realized");
        out.push_back(it->second);
    }
    return out;
}

namespace {

void check(PropertyReport& r, bool ok, const std::string& what) {
    if (ok)
        r.checks.push_back(what);
    else
        r.failures.push_back(what);
}

bool last_by_k_member(const std::vector<int>& w, unsigned k, int a_sym, int hash_sym) {
    // block before the first '#': is its k-th letter from the end an 'a'?
    std::size_t end = 0;
    while (end < w.size() && w[end] != hash_sym) ++end;
    if (end == w.size()) return false;  // no '#': value cannot drop below 0
    if (end < k) return false;
    return w[end - k] == a_sym;
}

}  // namespace

PropertyReport family_properties(const FamilySpec& spec) {
    PropertyReport r;
    if (spec.name == "weight_lb") {
        unsigned lambda = opt_uint(spec, "lambda", 2), k = req_uint(spec, "k");
        Automaton a = weight_lb_family(lambda, k);
        int q2 = a.state_index("q2");
        std::set<std::string> distinct;
        Rational lam(lambda);
        for (unsigned x = 1; x <= k; ++x) {
            Word u = weight_lb_witness(a, lambda, x);
            ExtRational g = gap(a, q2, u);
            bool ok = !g.is_infinite() && g.value() == lam * Rational(x);
            check(r, ok, "gap(q2, u_" + std::to_string(x) + ") = lambda*" + std::to_string(x));
            if (!g.is_infinite()) distinct.insert(to_string(g.value()));
        }
        check(r, distinct.size() == k, "gaps of u_1..u_k pairwise distinct");
        // recoverability: the suffix (-k)^omega makes the q2 branch optimal
        Rational qtail = -Rational(k) * lam / (lam - 1);
        PeriodicWord mk{{}, {a.symbol_index("-" + std::to_string(k))}};
        for (unsigned x = 2; lam * Rational(x) < Rational(k) * lam / (lam - 1); ++x) {
            Word u = weight_lb_witness(a, lambda, x);
            CostVector c = cost_vector(a, u);
            Rational lhs = periodic_value(a, a.initial(), {u, mk.block});
            Rational rhs = c[static_cast<std::size_t>(q2)].value() +
                           qtail / rational_pow(lam, u.size());
            check(r, lhs == rhs, "gap of u_" + std::to_string(x) + " recovered by (-k)^omega");
        }
    } else if (spec.name == "nondeterminizable") {
        unsigned h = req_uint(spec, "h"), k = req_uint(spec, "k");
        unsigned n = opt_uint(spec, "n", 100);
        Automaton a = nondeterminizable_family(h, k);
        auto [w, gaps] = nondeterminizable_witness(a, h, k, n);
        int q2 = a.state_index("q2");
        // verify the predicted gaps against the automaton itself, prefix by prefix
        bool all_match = true;
        CostVector c = initial_cost_vector(a);
        for (std::size_t i = 0; i < w.size(); ++i) {
            c = cost_step(a, c, w[i]);  // scaled costs: differences are gaps
            ExtRational best = ExtRational::infinity();
            for (const auto& e : c) best = min(best, e);
            Rational g = c[static_cast<std::size_t>(q2)].value() - best.value();
            if (g != gaps[i]) all_match = false;
        }
        check(r, all_match, "greedy-word gaps match the automaton exactly");
        std::set<std::string> distinct;
        bool bounded = true;
        for (const auto& g : gaps) {
            distinct.insert(to_string(g));
            if (g < 0 || g > Rational(h)) bounded = false;
        }
        check(r, distinct.size() == gaps.size(),
              "gap sequence never revisits a value (" + std::to_string(gaps.size()) +
                  " prefixes)");
        check(r, bounded, "gaps stay within [0, h] (recoverable forever)");
    } else if (spec.name == "combined_lb") {
        unsigned lambda = opt_uint(spec, "lambda", 2), k = req_uint(spec, "k"),
                 l = req_uint(spec, "l");
        Automaton a = combined_lb_family(lambda, k, l);
        check(r, a.num_states() == static_cast<int>(l + 2), "l + 2 states");
        double expect = 1;
        for (unsigned i = 0; i < l; ++i) expect *= static_cast<double>(lambda * k + 2);
        check(r, static_cast<double>(a.num_symbols()) == expect,
              "alphabet of (lambda k + 2)^l tuples");
        check(r, a.complete(), "complete");
        Word one{0};
        CostVector c = cost_vector(a, one);
        bool zeros = true;
        for (unsigned i = 1; i <= l; ++i) {
            const auto& e = c[static_cast<std::size_t>(a.state_index("q" + std::to_string(i)))];
            if (e.is_infinite() || e.value() != 0) zeros = false;
        }
        check(r, zeros, "cost(q_i, <sigma>) = 0 for every machine i");
        if (a.num_symbols() <= 40) {
            double kl = 1;
            for (unsigned i = 0; i < l; ++i) kl *= static_cast<double>(k);
            auto det = determinize_exact(a, 100000);
            check(r, static_cast<double>(det.stats.states_created) >= kl,
                  "determinization needs at least k^l states");
        }
    } else if (spec.name == "last_by_k") {
        Rational lam = spec.params.count("lambda") ? spec.params.at("lambda") : Rational(2);
        unsigned k = req_uint(spec, "k");
        Automaton a = last_by_k_family(lam, k);
        int a_sym = a.symbol_index("a"), hash_sym = a.symbol_index("#");
        auto agrees = [&](const Word& w) {
            bool member = last_by_k_member(w, k, a_sym, hash_sym);
            return (word_value(a, w) < 0) == member;
        };
        bool ok = true;
        if (k <= 3) {  // exhaustive up to length k + 3
            std::vector<Word> frontier{{}};
            for (unsigned len = 1; len <= k + 3; ++len) {
                std::vector<Word> nf;
                for (const auto& w : frontier)
                    for (int s = 0; s < 3; ++s) {
                        Word ww = w;
                        ww.push_back(s);
                        if (!agrees(ww)) ok = false;
                        nf.push_back(std::move(ww));
                    }
                frontier = std::move(nf);
            }
            check(r, ok, "value < 0 iff block before first '#' in L_k (exhaustive)");
        } else {  // canonical positives/negatives plus random sampling
            std::mt19937 rng(12345);
            for (int t = 0; t < 300 && ok; ++t) {
                std::uniform_int_distribution<unsigned> len_d(1, k + 4);
                unsigned len = len_d(rng);
                Word w;
                for (unsigned i = 0; i < len; ++i) {
                    // bias towards a/b with one likely '#'
                    unsigned roll = rng() % 10;
                    w.push_back(roll < 4 ? 0 : roll < 8 ? 1 : 2);
                }
                if (!agrees(w)) ok = false;
            }
            Word pos;  // a b^{k-1} #
            pos.push_back(0);
            for (unsigned i = 1; i < k; ++i) pos.push_back(1);
            pos.push_back(2);
            if (!agrees(pos) || word_value(a, pos) >= 0) ok = false;
            Word neg = pos;  // b b^{k-1} #
            neg[0] = 1;
            if (!agrees(neg) || word_value(a, neg) < 0) ok = false;
            check(r, ok, "value < 0 iff block before first '#' in L_k (sampled)");
        }
    } else if (spec.name == "precision_lb") {
        unsigned l = opt_uint(spec, "l", 4);
        Automaton a = precision_lb_family();
        int q2 = a.state_index("q2");
        std::vector<Word> words = precision_lb_witnesses(a, l);
        Integer two_l = Integer(1) << l;
        bool ok = true;
        for (std::size_t i = 0; i < words.size(); ++i) {
            ExtRational g = gap(a, q2, words[i]);
            if (g.is_infinite() || g.value() != make_rational(Integer(i), two_l)) ok = false;
        }
        check(r, ok && words.size() == two_l.get_ui() + 1,
              "gaps i/2^" + std::to_string(l) + " realized for every i <= 2^" +
                  std::to_string(l));
    } else if (spec.name == "discount_lb") {
        unsigned k = req_uint(spec, "k");
        Automaton a = discount_lb_family(k);
        int q2 = a.state_index("q2");
        Rational lam = a.lambda();
        unsigned half = 1u << (k - 1);  // K / 2
        std::vector<Rational> costs;
        for (unsigned i = 0; i <= half; ++i) {
            Word u;
            for (unsigned j = 0; j < i; ++j) u.push_back(a.symbol_index("1"));
            for (unsigned j = i; j < half; ++j) u.push_back(a.symbol_index("0"));
            CostVector c = cost_vector(a, u);
            costs.push_back(c[static_cast<std::size_t>(q2)].value());
        }
        bool sep = true;
        for (std::size_t i = 0; i + 1 < costs.size(); ++i)
            if (costs[i + 1] - costs[i] <= make_rational(1, 2)) sep = false;
        check(r, sep, "pairwise cost differences along u_i exceed 1/2");
        // recoverability via (-1)^omega: the q2 branch beats the zero branch
        Rational qtail = -lam / (lam - 1);
        Word minus1{a.symbol_index("-1")};
        bool rec = true;
        for (unsigned i = 0; i <= half; ++i) {
            Word u;
            for (unsigned j = 0; j < i; ++j) u.push_back(a.symbol_index("1"));
            for (unsigned j = i; j < half; ++j) u.push_back(a.symbol_index("0"));
            Rational lhs = periodic_value(a, a.initial(), {u, minus1});
            Rational rhs = costs[i] + qtail / rational_pow(lam, u.size());
            if (lhs != rhs) rec = false;
        }
        check(r, rec, "every u_i gap recovered by (-1)^omega");
    } else if (spec.name == "statecount_lb") {
        unsigned n = req_uint(spec, "n"), k = opt_uint(spec, "k", 4);
        Automaton a = statecount_lb_family(n, k);
        Rational third = make_rational(1, 3);
        bool ok = true;
        for (unsigned b = 0; b < (1u << n); ++b) {
            Word u;
            for (unsigned j = 1; j <= n; ++j)
                u.push_back(b & (1u << (j - 1)) ? a.symbol_index("1_" + std::to_string(j))
                                                : a.symbol_index("0"));
            CostVector c = cost_vector(a, u);
            for (unsigned i = 1; i <= n; ++i) {
                const auto& e =
                    c[static_cast<std::size_t>(a.state_index("q" + std::to_string(i)))];
                bool bit = b & (1u << (i - 1));
                if (e.is_infinite() || ((e.value() > third) != bit)) ok = false;
            }
        }
        check(r, ok, "cost(q_i, u_b) > 1/3 iff bit i of b is 1 (all 2^n words)");
    } else if (spec.name == "incomplete_b") {
        unsigned lambda = opt_uint(spec, "lambda", 2);
        unsigned nmax = opt_uint(spec, "n", 6);
        Automaton a = incomplete_b_family(lambda);
        int q2 = a.state_index("q2");
        Rational lam(lambda);
        bool ok = true;
        for (unsigned n = 1; n <= nmax; ++n) {
            Word u(n, a.symbol_index("a"));
            Rational expect = 0;
            for (unsigned i = 0; i <= n; ++i) expect += rational_pow(lam, i);
            ExtRational g = gap(a, q2, u);
            if (g.is_infinite() || g.value() != expect) ok = false;
        }
        check(r, ok, "gap(q2, a^n) = sum_{i<=n} lambda^i for n <= " + std::to_string(nmax));
        check(r, !a.complete(), "automaton is (deliberately) incomplete");
    } else if (spec.name == "nomax_pair") {
        unsigned k = opt_uint(spec, "k", 6);
        auto [a, b] = nomax_pair_family();
        bool zero = true;
        for (const auto& t : a.transitions())
            if (t.weight != 0) zero = false;
        check(r, zero, "A is the zero automaton");
        for (unsigned level = 3; level <= k; ++level) {
            std::vector<Word> ws = nomax_witnesses(b, level);
            Integer two_l = Integer(1) << level;
            bool ok = true;
            for (std::size_t j = 0; j < ws.size(); ++j) {
                Rational v = rational_pow(b.lambda(), ws[j].size()) * word_value(b, ws[j]);
                if (v != make_rational(5 * Integer(j), two_l)) ok = false;
            }
            check(r, ok, "gap(B, u_{j," + std::to_string(level) +
                             "}) = 5j/2^" + std::to_string(level) +
                             " for every j <= ceil(2^" + std::to_string(level) + "/5)");
        }
    } else {
        throw std::invalid_argument("unknown family '" + spec.name + "'");
    }
    return r;
}

}  // namespace dsa
