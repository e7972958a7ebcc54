#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "arakelov/log_sum.hpp"
#include "arakelov/rational.hpp"

namespace arakelov {

// One symbolic atom of a bound expression. Four shapes:
//   Unit              (syms empty, n = 0)
//   Log(n)            (syms empty, n > 1)
//   Sym(names)        (syms nonempty, n = 0)
//   SymTimesLog(names, n)
// `syms` is a '*'-joined, sorted product of named constants, so the product
// pi * kappa0 is the single atom "kappa0*pi". Most atoms carry one name.
struct Atom {
    std::string syms;
    long long n = 0;

    static Atom unit() { return {}; }
    static Atom log(long long n);
    static Atom sym(const std::string& name);
    static Atom sym_log(const std::string& name, long long n);

    bool has_log() const { return n != 0; }
    bool has_sym() const { return !syms.empty(); }
    std::vector<std::string> sym_factors() const;

    auto operator<=>(const Atom&) const = default;
};

// Exact linear combination over Atoms; the symbolic side of every closed-form
// bound in this library. Zero coefficients are never stored.
class BoundExpression {
  public:
    BoundExpression() = default;
    explicit BoundExpression(const Rational& constant);

    void add_term(const Atom& a, const Rational& c);

    BoundExpression& operator+=(const BoundExpression& o);
    friend BoundExpression operator+(BoundExpression a,
                                     const BoundExpression& b) {
        return a += b;
    }
    BoundExpression operator*(const Rational& c) const;

    // Multiplies every atom by a named constant: Unit -> Sym, Log -> SymTimesLog.
    BoundExpression times_symbol(const std::string& name) const;

    // Embeds a geometric log-sum: atom q -> Log(q).
    static BoundExpression from_logsum(const FormalLogSum& s);

    // Factors every Log(n) into prime atoms: Log(35) -> Log(5) + Log(7).
    BoundExpression expand_logs() const;

    Rational coefficient(const Atom& a) const;
    const std::map<Atom, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Numeric value; Unit -> 1, Log(n) -> ln n, Sym -> product of bindings,
    // SymTimesLog -> product * ln n. "pi" is bound automatically unless the
    // caller overrides it. Throws UnboundSymbol for any other missing name.
    double eval(const std::map<std::string, double>& bindings) const;

    std::string str() const;

    friend bool operator==(const BoundExpression&,
                           const BoundExpression&) = default;

  private:
    std::map<Atom, Rational> terms_;
};

}  // namespace arakelov
