#pragma once

#include <map>
#include <string>

#include "arakelov/rational.hpp"

namespace arakelov {

// Exact linear combination sum_q c_q * log(q) over integer atoms q > 1
// (primes or prime powers; the norms of finite primes). Zero coefficients
// are never stored, so exact equality of values is map equality.
class FormalLogSum {
  public:
    FormalLogSum() = default;

    // Adds c * log(atom); requires atom > 1.
    void add_term(long long atom, const Rational& c);

    // c * log(n) with n expanded into prime atoms: log(12) becomes
    // 2 log(2) + log(3). Requires n >= 1 (log 1 contributes nothing).
    static FormalLogSum log_integer(long long n,
                                    const Rational& c = Rational(1));

    FormalLogSum& operator+=(const FormalLogSum& o);
    friend FormalLogSum operator+(FormalLogSum a, const FormalLogSum& b) {
        return a += b;
    }
    FormalLogSum operator*(const Rational& c) const;

    Rational coefficient(long long atom) const;
    const std::map<long long, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // sum coeff * ln(atom), natural logarithm.
    double eval() const;

    std::string str() const;

    friend bool operator==(const FormalLogSum&, const FormalLogSum&) = default;

  private:
    std::map<long long, Rational> terms_;
};

}  // namespace arakelov
