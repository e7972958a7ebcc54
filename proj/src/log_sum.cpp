#include "arakelov/log_sum.hpp"

#include <cmath>
#include <sstream>

#include "arakelov/errors.hpp"
#include "arakelov/numtheory.hpp"

namespace arakelov {

void FormalLogSum::add_term(long long atom, const Rational& c) {
    if (atom <= 1) throw InputError("log-sum atom must exceed 1");
    if (c.is_zero()) return;
    auto it = terms_.find(atom);
    if (it == terms_.end()) {
        terms_.emplace(atom, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FormalLogSum FormalLogSum::log_integer(long long n, const Rational& c) {
    if (n < 1) throw InputError("log of a non-positive integer");
    FormalLogSum s;
    for (const auto& [p, e] : factorize(n))
        s.add_term(p, c * Rational(e));
    return s;
}

FormalLogSum& FormalLogSum::operator+=(const FormalLogSum& o) {
    for (const auto& [atom, c] : o.terms_) add_term(atom, c);
    return *this;
}

FormalLogSum FormalLogSum::operator*(const Rational& c) const {
    FormalLogSum s;
    if (c.is_zero()) return s;
    for (const auto& [atom, coeff] : terms_) s.terms_.emplace(atom, coeff * c);
    return s;
}

Rational FormalLogSum::coefficient(long long atom) const {
    auto it = terms_.find(atom);
    return it == terms_.end() ? Rational(0) : it->second;
}

double FormalLogSum::eval() const {
    double acc = 0.0;
    for (const auto& [atom, c] : terms_)
        acc += c.to_double() * std::log(static_cast<double>(atom));
    return acc;
}

std::string FormalLogSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [atom, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*log(" << atom << ")";
        first = false;
    }
    return os.str();
}

}  // namespace arakelov
