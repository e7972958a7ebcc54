#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "arakelov/errors.hpp"

namespace arakelov {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP canonical form). All intersection arithmetic in this
// library runs on this type; doubles appear only in explicitly numeric
// evaluation paths.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(make_int(n)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num/den" or "num" (optional leading '-').
    static Rational from_string(std::string_view s);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.v_ >= b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.v_ != b.v_;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    // Exact value for integers that fit a long long; throws otherwise.
    long long to_integer() const;

    const mpq_class& raw() const { return v_; }

  private:
    static mpz_class make_int(long long n);
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace arakelov
