#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsa/algebra.hpp"
#include "dsa/analysis.hpp"
#include "dsa/approx.hpp"
#include "dsa/determinize.hpp"
#include "dsa/errors.hpp"
#include "dsa/families.hpp"
#include "dsa/io.hpp"
#include "dsa/value.hpp"

namespace {

// exit codes: 0 ok, 1 usage/IO, 2 validation, 3 negative decision, 4 cap exceeded
constexpr int kOk = 0, kUsage = 1, kValidation = 2, kNo = 3, kCap = 4;

std::string show(const dsa::Rational& r) {
    // always num/den, even for integers ("0/1"), then the decimal rendering
    return r.get_num().get_str() + "/" + r.get_den().get_str() + " (~" +
           dsa::to_decimal_string(r) + ")";
}

std::map<std::string, dsa::Rational> parse_params(const std::string& text) {
    std::map<std::string, dsa::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected name=value in --params, got '" + item + "'");
        out[item.substr(0, eq)] = dsa::rational_from_string(item.substr(eq + 1));
    }
    return out;
}

// "k=4..8" or "k=4"
std::pair<long, long> parse_range(const std::string& text, const std::string& key) {
    auto params = [&] {
        std::map<std::string, std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("expected name=lo..hi in --params");
            out[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return out;
    }();
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing range for '" + key + "' in --params");
    auto dots = it->second.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(it->second);
        return {v, v};
    }
    return {std::stol(it->second.substr(0, dots)), std::stol(it->second.substr(dots + 2))};
}

int cmd_validate(const std::string& path) {
    dsa::Automaton a = dsa::read_automaton_file(path);
    dsa::ValidationReport r = a.validate();
    std::cout << "complete: " << (r.complete ? "yes" : "no") << "\n"
              << "deterministic: " << (r.deterministic ? "yes" : "no") << "\n"
              << "lambda_ok: " << (r.lambda_ok ? "yes" : "no") << "\n";
    for (const auto& issue : r.issues) std::cout << "issue: " << issue << "\n";
    return r.ok() ? kOk : kValidation;
}

int cmd_value(const std::string& path, const std::string& word_text, bool with_tail) {
    dsa::Automaton a = dsa::read_automaton_file(path);
    dsa::Word w = dsa::word_from_string(a, word_text);
    dsa::Rational v = dsa::word_value(a, w);
    std::cout << "value = " << show(v) << "\n";
    if (with_tail) {
        dsa::TailBounds tb = dsa::tail_bounds(a, w);
        std::cout << "tail_low = " << show(tb.low) << "\n"
                  << "tail_high = " << show(tb.high) << "\n";
    }
    return kOk;
}

void print_stats(const dsa::DeterminizationStats& s, double ms) {
    std::cout << "states = " << s.states_created << "\n"
              << "bound = "
              << (s.state_bound ? s.state_bound->get_str() : std::string("overflow"))
              << "\n"
              << "time_ms = " << ms << "\n";
}

int cmd_determinize(const std::string& path, std::size_t cap, const std::string& out) {
    dsa::Automaton a = dsa::read_automaton_file(path);
    auto t0 = std::chrono::steady_clock::now();
    dsa::DeterminizationResult r = dsa::determinize_exact(a, cap);
    auto t1 = std::chrono::steady_clock::now();
    dsa::write_determinization_file(out, r);
    print_stats(r.stats, std::chrono::duration<double, std::milli>(t1 - t0).count());
    return kOk;
}

int cmd_approx_det(const std::string& path, const std::string& method, unsigned p,
                   int depth, const std::string& out) {
    dsa::Automaton a = dsa::read_automaton_file(path);
    if (method == "round") {
        auto t0 = std::chrono::steady_clock::now();
        dsa::DeterminizationResult r = dsa::approx_determinize_rounding(a, dsa::Precision{p});
        auto t1 = std::chrono::steady_clock::now();
        dsa::write_determinization_file(out, r);
        print_stats(r.stats, std::chrono::duration<double, std::milli>(t1 - t0).count());
        std::cout << "error_bound = " << show(dsa::Precision{p}.epsilon()) << "\n";
        return kOk;
    }
    if (method == "unfold") {
        unsigned l = depth >= 0 ? static_cast<unsigned>(depth)
                                : dsa::min_unfold_depth(a, dsa::Precision{p});
        dsa::Automaton d = dsa::unfold(a, l);
        dsa::write_automaton_file(out, d);
        std::cout << "depth = " << l << "\n"
                  << "states = " << d.num_states() << "\n";
        if (l >= 1)
            std::cout << "error_bound = " << show(dsa::unfold_error_bound(a, l)) << "\n";
        return kOk;
    }
    throw std::invalid_argument("unknown method '" + method + "' (expected unfold|round)");
}

int cmd_compose(const std::string& op, const std::vector<std::string>& inputs,
                const std::string& scalar, const std::string& out) {
    if (inputs.empty()) throw std::invalid_argument("compose: no inputs");
    dsa::Automaton a = dsa::read_automaton_file(inputs[0]);
    dsa::Automaton result = a;
    if (op == "scale") {
        if (scalar.empty()) throw std::invalid_argument("compose scale: missing --scalar");
        result = dsa::op_scale(a, dsa::rational_from_string(scalar));
    } else if (op == "neg") {
        result = dsa::op_neg(a);
    } else {
        if (inputs.size() != 2)
            throw std::invalid_argument("compose " + op + ": expected two inputs");
        dsa::Automaton b = dsa::read_automaton_file(inputs[1]);
        if (op == "min")
            result = dsa::op_min(a, b);
        else if (op == "add")
            result = dsa::op_add(a, b);
        else if (op == "sub")
            result = dsa::op_sub(a, b);
        else if (op == "max")
            result = dsa::op_max_integral(a, b);
        else
            throw std::invalid_argument("unknown op '" + op + "'");
    }
    dsa::write_automaton_file(out, result);
    std::cout << "states = " << result.num_states() << "\n";
    return kOk;
}

int cmd_compare(const std::string& pa, const std::string& pb, unsigned p,
                const std::string& mode) {
    dsa::Automaton a = dsa::read_automaton_file(pa);
    dsa::Decision d{};
    if (mode == "geq") {
        dsa::Automaton b = dsa::read_automaton_file(pb);
        d = dsa::approx_compare_geq(a, b, dsa::Precision{p});
    } else if (mode == "equiv") {
        dsa::Automaton b = dsa::read_automaton_file(pb);
        d = dsa::approx_equiv(a, b, dsa::Precision{p});
    } else if (mode == "universal") {
        d = dsa::approx_universal(a, dsa::Precision{p});
    } else {
        throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    std::cout << (d.yes ? "yes" : "no") << "\n"
              << "sup = " << show(d.sup_value) << "\n"
              << "epsilon = " << show(d.epsilon) << "\n";
    return d.yes ? kOk : kNo;
}

int cmd_generate(const std::string& family, const std::string& params,
                 const std::string& out) {
    dsa::FamilySpec spec{family, params.empty() ? std::map<std::string, dsa::Rational>{}
                                                : parse_params(params)};
    std::vector<dsa::Automaton> as = dsa::generate(spec);
    dsa::write_automaton_file(out, as[0]);
    std::cout << "wrote " << out << " (" << as[0].num_states() << " states)\n";
    if (as.size() > 1) {
        dsa::write_automaton_file(out + ".b", as[1]);
        std::cout << "wrote " << out << ".b (" << as[1].num_states() << " states)\n";
    }
    return kOk;
}

int cmd_bench(const std::string& suite, const std::string& params) {
    std::cout << "family,params,states,bound,time_ms\n";
    if (suite == "determinization") {
        auto [lo, hi] = parse_range(params, "k");
        for (long k = lo; k <= hi; ++k) {
            dsa::Automaton a = dsa::weight_lb_family(2, static_cast<unsigned>(k));
            auto t0 = std::chrono::steady_clock::now();
            dsa::DeterminizationResult r = dsa::determinize_exact(a);
            auto t1 = std::chrono::steady_clock::now();
            std::cout << "weight_lb,k=" << k << "," << r.stats.states_created << ","
                      << (r.stats.state_bound ? r.stats.state_bound->get_str()
                                              : std::string("overflow"))
                      << "," << std::chrono::duration<double, std::milli>(t1 - t0).count()
                      << "\n";
        }
        return kOk;
    }
    if (suite == "approximation") {
        auto [klo, khi] = parse_range(params, "k");
        auto [plo, phi] = parse_range(params, "p");
        for (long k = klo; k <= khi; ++k)
            for (long p = plo; p <= phi; ++p) {
                dsa::Automaton a = dsa::discount_lb_family(static_cast<unsigned>(k));
                auto t0 = std::chrono::steady_clock::now();
                dsa::DeterminizationResult r = dsa::approx_determinize_rounding(
                    a, dsa::Precision{static_cast<unsigned>(p)});
                auto t1 = std::chrono::steady_clock::now();
                std::cout << "discount_lb,k=" << k << ";p=" << p << ","
                          << r.stats.states_created << ","
                          << (r.stats.state_bound ? r.stats.state_bound->get_str()
                                                  : std::string("overflow"))
                          << ","
                          << std::chrono::duration<double, std::milli>(t1 - t0).count()
                          << "\n";
            }
        return kOk;
    }
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected determinization|approximation)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discounted-sum automata toolkit"};
    app.require_subcommand(1);

    std::string path, out, word_text, method = "round", op, scalar, family, params, mode =
        "geq", path_b, suite;
    std::size_t cap = 1'000'000;
    unsigned p = 4;
    int depth = -1;
    bool with_tail = false;
    std::vector<std::string> inputs;

    auto* validate = app.add_subcommand("validate", "check an automaton file");
    validate->add_option("path", path)->required();

    auto* value = app.add_subcommand("value", "exact value of a finite word");
    value->add_option("path", path)->required();
    value->add_option("--word", word_text, "comma-separated letters")->required();
    value->add_flag("--prefix-with-tail", with_tail, "also print infinite-extension bounds");

    auto* det = app.add_subcommand("determinize", "exact gap subset construction");
    det->add_option("path", path)->required();
    det->add_option("--cap", cap, "state cap");
    det->add_option("--out", out)->required();

    auto* approx = app.add_subcommand("approx-det", "approximate determinization");
    approx->add_option("path", path)->required();
    approx->add_option("--method", method, "unfold|round");
    approx->add_option("--precision", p, "p with epsilon = 2^-p");
    approx->add_option("--depth", depth, "unfold depth (default: minimal for precision)");
    approx->add_option("--out", out)->required();

    auto* compose = app.add_subcommand("compose", "closure operations");
    compose->add_option("--op", op, "min|max|add|sub|scale|neg")->required();
    compose->add_option("inputs", inputs, "input automata")->required();
    compose->add_option("--scalar", scalar, "rational scalar for scale");
    compose->add_option("--out", out)->required();

    auto* compare = app.add_subcommand("compare", "approximate comparison");
    compare->add_option("a", path)->required();
    compare->add_option("b", path_b);
    compare->add_option("--precision", p, "p with epsilon = 2^-p");
    compare->add_option("--mode", mode, "geq|equiv|universal");

    auto* gen = app.add_subcommand("generate", "named automaton families");
    gen->add_option("--family", family)->required();
    gen->add_option("--params", params, "k=...,l=...");
    gen->add_option("--out", out)->required();

    auto* bench = app.add_subcommand("bench", "benchmark suites (CSV on stdout)");
    bench->add_option("--suite", suite, "determinization|approximation")->required();
    bench->add_option("--params", params, "ranges, e.g. k=4..8 or k=2..4,p=2..6");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (value->parsed()) return cmd_value(path, word_text, with_tail);
        if (det->parsed()) return cmd_determinize(path, cap, out);
        if (approx->parsed()) return cmd_approx_det(path, method, p, depth, out);
        if (compose->parsed()) return cmd_compose(op, inputs, scalar, out);
        if (compare->parsed()) {
            if (mode != "universal" && path_b.empty())
                throw std::invalid_argument("compare: second automaton required");
            return cmd_compare(path, path_b, p, mode);
        }
        if (gen->parsed()) return cmd_generate(family, params, out);
        if (bench->parsed()) return cmd_bench(suite, params);
    } catch (const dsa::CapExceededError& e) {
        std::cerr << "error: " << e.what() << " (states created: " << e.states_created()
                  << ")\n";
        return kCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
