#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsa {

// Exact rational arithmetic. mpq_class keeps results of arithmetic canonical
// (lowest terms, positive denominator); construction from raw num/den does
// not, so all entry points go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "3", "-5/2", "0". Whitespace is not tolerated.
Rational rational_from_string(const std::string& s);

// Canonical text form: "num" if den == 1, else "num/den".
std::string to_string(const Rational& r);

// Truncated decimal rendering with the given number of fractional digits,
// for human-facing CLI output only. Never feeds back into computation.
std::string to_decimal_string(const Rational& r, int digits = 12);

Rational rational_pow(const Rational& base, unsigned long exp);

// Rational extended with +infinity (used for costs and gaps; min of an empty
// run set). Addition and scaling absorb infinity; subtraction and comparison
// against infinity behave as expected for a single top element.
class ExtRational {
  public:
    ExtRational() : inf_(false), v_(0) {}
    ExtRational(Rational v) : inf_(false), v_(std::move(v)) {}
    static ExtRational infinity() {
        ExtRational e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    const Rational& value() const {
        if (inf_) throw std::logic_error("ExtRational: value() on infinity");
        return v_;
    }

    friend ExtRational operator+(const ExtRational& a, const Rational& b) {
        if (a.inf_) return a;
        return ExtRational(a.v_ + b);
    }
    friend ExtRational operator*(const Rational& c, const ExtRational& a) {
        if (a.inf_) return a;
        return ExtRational(c * a.v_);
    }
    friend ExtRational operator-(const ExtRational& a, const Rational& b) {
        if (a.inf_) return a;
        return ExtRational(a.v_ - b);
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    friend const ExtRational& min(const ExtRational& a, const ExtRational& b) {
        return b < a ? b : a;
    }

    std::string str() const { return inf_ ? "inf" : to_string(v_); }

  private:
    bool inf_;
    Rational v_;
};

}  // namespace dsa
