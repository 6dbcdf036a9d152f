#include "dsa/rational.hpp"

#include <stdexcept>

namespace dsa {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(s), 1);
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    bool neg = r < 0;
    Rational x = neg ? Rational(-r) : r;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled_num = x.get_num() * scale;
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
                x.get_den().get_mpz_t());
    Integer whole = q / scale;
    Integer frac = q % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    // strip trailing zeros but keep at least one fractional digit
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    std::string out = (neg ? "-" : "") + whole.get_str() + "." + fs;
    if (rem != 0) out += "...";  // truncated, not exact
    return out;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    return make_rational(num, den);
}

}  // namespace dsa
