#include "arakelov/rational.hpp"

#include <ostream>

namespace arakelov {

mpz_class Rational::make_int(long long n) {
    // mpz_class has no long long constructor; route through set_str for the
    // full 64-bit range.
    mpz_class z;
    z.set_str(std::to_string(n), 10);
    return z;
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(make_int(num), make_int(den));
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    const auto slash = s.find('/');
    mpq_class v;
    std::string text(s);
    if (v.set_str(text, 10) != 0)
        throw InputError("cannot parse rational: \"" + text + "\"");
    if (slash != std::string_view::npos && v.get_den() == 0)
        throw InputError("rational with zero denominator: \"" + text + "\"");
    if (v.get_den() == 0)
        throw InputError("cannot parse rational: \"" + text + "\"");
    v.canonicalize();
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

long long Rational::to_integer() const {
    if (v_.get_den() != 1)
        throw InputError("rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        throw InputError("integer " + str() + " out of range");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace arakelov
