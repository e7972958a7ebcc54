#include "arakelov/bound_expr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arakelov/errors.hpp"
#include "arakelov/numtheory.hpp"

namespace arakelov {

namespace {

std::string join_sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& s : names) {
        if (!out.empty()) out += '*';
        out += s;
    }
    return out;
}

}  // namespace

Atom Atom::log(long long n) {
    if (n <= 1) throw InputError("log atom must exceed 1");
    return {"", n};
}

Atom Atom::sym(const std::string& name) {
    if (name.empty()) throw InputError("empty symbol name");
    return {name, 0};
}

Atom Atom::sym_log(const std::string& name, long long n) {
    if (name.empty()) throw InputError("empty symbol name");
    if (n <= 1) throw InputError("log atom must exceed 1");
    return {name, n};
}

std::vector<std::string> Atom::sym_factors() const {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : syms) {
        if (ch == '*') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

BoundExpression::BoundExpression(const Rational& constant) {
    add_term(Atom::unit(), constant);
}

void BoundExpression::add_term(const Atom& a, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BoundExpression& BoundExpression::operator+=(const BoundExpression& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

BoundExpression BoundExpression::operator*(const Rational& c) const {
    BoundExpression e;
    if (c.is_zero()) return e;
    for (const auto& [a, coeff] : terms_) e.terms_.emplace(a, coeff * c);
    return e;
}

BoundExpression BoundExpression::times_symbol(const std::string& name) const {
    if (name.empty()) throw InputError("empty symbol name");
    BoundExpression e;
    for (const auto& [a, c] : terms_) {
        auto factors = a.sym_factors();
        factors.push_back(name);
        Atom b{join_sorted(std::move(factors)), a.n};
        e.add_term(b, c);
    }
    return e;
}

BoundExpression BoundExpression::from_logsum(const FormalLogSum& s) {
    BoundExpression e;
    for (const auto& [atom, c] : s.terms()) e.add_term(Atom::log(atom), c);
    return e;
}

BoundExpression BoundExpression::expand_logs() const {
    BoundExpression e;
    for (const auto& [a, c] : terms_) {
        if (!a.has_log()) {
            e.add_term(a, c);
            continue;
        }
        for (const auto& [p, mult] : factorize(a.n))
            e.add_term(Atom{a.syms, p}, c * Rational(mult));
    }
    return e;
}

Rational BoundExpression::coefficient(const Atom& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

double BoundExpression::eval(
    const std::map<std::string, double>& bindings) const {
    double acc = 0.0;
    for (const auto& [a, c] : terms_) {
        double term = c.to_double();
        for (const auto& name : a.sym_factors()) {
            auto it = bindings.find(name);
            if (it != bindings.end())
                term *= it->second;
            else if (name == "pi")
                term *= std::numbers::pi;
            else
                throw UnboundSymbol(name);
        }
        if (a.has_log()) term *= std::log(static_cast<double>(a.n));
        acc += term;
    }
    return acc;
}

std::string BoundExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (a.has_sym()) os << "*" << a.syms;
        if (a.has_log()) os << "*log(" << a.n << ")";
        first = false;
    }
    return os.str();
}

}  // namespace arakelov
