#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "qsolve/errors.hpp"

namespace qsolve {

using Integer = mpz_class;

/// Exact rational number, always canonical: lowest terms, denominator > 0.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(const Integer& n) : v_(n) {}                  // NOLINT
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw Error("zero denominator");
        v_.canonicalize();
    }
    Rational(int num, int den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class b = v_;
        unsigned k = e;
        while (k) {
            if (k & 1u) r *= b;
            b *= b;
            k >>= 1;
        }
        Rational out;
        out.v_ = r;
        return out;
    }

    double to_double() const { return v_.get_d(); }

    /// "p" for integers, "p/q" otherwise; never decimal.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            Integer n(s.substr(0, slash));
            Integer d(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw MalformedInput("bad rational literal: " + s);
        }
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw MalformedInput("bad rational literal: " + s);
        try {
            Integer n(digits);
            Integer d;
            mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw MalformedInput("bad rational literal: " + s);
        }
    }
    try {
        return Rational(Integer(s));
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad rational literal: " + s);
    }
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial_z(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational binomial(unsigned n, unsigned k) { return Rational(binomial_z(n, k)); }

}  // namespace qsolve
