#include "dsa/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dsa {
namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Integer integer_field(const json& j, const char* what) {
    try {
        if (j.is_string()) return Integer(j.get<std::string>());
        if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    } catch (...) {
    }
    throw std::invalid_argument(std::string("automaton file: bad integer in ") + what);
}

Rational rational_field(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument(std::string("automaton file: expected {num, den} in ") +
                                    what);
    Integer num = integer_field(j["num"], what), den = integer_field(j["den"], what);
    if (den == 0)
        throw std::invalid_argument(std::string("automaton file: zero denominator in ") + what);
    return make_rational(num, den);
}

json automaton_json(const Automaton& a) {
    json out;
    out["version"] = 1;
    out["discount_factor"] = rational_json(a.lambda());
    out["alphabet"] = a.alphabet();
    out["states"] = a.states();
    out["initial"] = a.states()[static_cast<std::size_t>(a.initial())];
    json ts = json::array();
    for (const auto& t : a.transitions())
        ts.push_back({{"from", a.states()[static_cast<std::size_t>(t.from)]},
                      {"symbol", a.alphabet()[static_cast<std::size_t>(t.symbol)]},
                      {"to", a.states()[static_cast<std::size_t>(t.to)]},
                      {"weight", rational_json(t.weight)}});
    out["transitions"] = std::move(ts);
    return out;
}

}  // namespace

std::string serialize(const Automaton& a) { return automaton_json(a).dump(2) + "\n"; }

std::string serialize(const DeterminizationResult& r) {
    json out = automaton_json(r.automaton);
    json gaps;
    for (std::size_t i = 0; i < r.state_gaps.size(); ++i) {
        json row = json::array();
        for (const auto& g : r.state_gaps[i]) row.push_back(g.str());
        gaps[r.automaton.states()[i]] = std::move(row);
    }
    out["state_map"] = std::move(gaps);
    out["stats"] = {{"states_created", r.stats.states_created},
                    {"iterations", r.stats.iterations},
                    {"state_bound",
                     r.stats.state_bound ? json(r.stats.state_bound->get_str())
                                         : json("overflow")}};
    return out.dump(2) + "\n";
}

Automaton parse_automaton(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("automaton file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("automaton file: expected an object");
    for (const char* key : {"version", "discount_factor", "alphabet", "states", "initial",
                            "transitions"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("automaton file: missing field '") + key +
                                        "'");
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
        throw std::invalid_argument("automaton file: unsupported version");

    Rational lambda = rational_field(j["discount_factor"], "discount_factor");
    if (lambda <= 1)
        throw std::invalid_argument("automaton file: discount factor must exceed 1");

    AutomatonBuilder b;
    try {
        b.alphabet(j["alphabet"].get<std::vector<std::string>>());
        b.states(j["states"].get<std::vector<std::string>>());
        b.initial(j["initial"].get<std::string>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("automaton file: bad field type: ") + e.what());
    }
    b.discount(lambda);
    if (!j["transitions"].is_array())
        throw std::invalid_argument("automaton file: transitions must be an array");
    for (const auto& t : j["transitions"]) {
        for (const char* key : {"from", "symbol", "to", "weight"})
            if (!t.contains(key))
                throw std::invalid_argument(
                    std::string("automaton file: transition missing '") + key + "'");
        try {
            b.transition(t["from"].get<std::string>(), t["symbol"].get<std::string>(),
                         t["to"].get<std::string>(), rational_field(t["weight"], "weight"));
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("automaton file: bad transition: ") +
                                        e.what());
        }
    }
    return b.build();
}

Automaton read_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

void write_automaton_file(const std::string& path, const Automaton& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize(a);
}

void write_determinization_file(const std::string& path, const DeterminizationResult& r) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize(r);
}

}  // namespace dsa
