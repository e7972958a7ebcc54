#include "arakelov/bounds.hpp"

#include <algorithm>

#include "arakelov/numtheory.hpp"

namespace arakelov {

namespace {

const std::string kKappa0Pi = "kappa0*pi";

}  // namespace

Rational compute_bp(const DualStats& stats) {
    if (stats.r < 2)
        throw DegenerateStats("b_p needs at least two components");
    if (stats.c < 1 || stats.r - stats.c - 1 < 0)
        throw DegenerateStats("b_p needs 1 <= c <= r - 1");
    if (stats.l < 1 || stats.u < stats.l)
        throw DegenerateStats("b_p needs crossing stats 1 <= l <= u");

    const Rational ratio = Rational(stats.u) / Rational(stats.l);
    Rational partial(0);   // T_k, accumulated
    Rational power(1);     // ratio^{k-1}
    Rational sum_squares;  // sum_{k=1}^{c} T_k^2
    for (long long k = 1; k <= stats.c; ++k) {
        partial += power;
        sum_squares += partial * partial;
        power *= ratio;
    }
    const Rational tail = Rational(stats.r - stats.c - 1) * partial * partial;
    return (sum_squares + tail) * Rational(stats.u) /
           (Rational(stats.l) * Rational(stats.l));
}

Rational ap_upper_bound(long long genus, const Rational& bp,
                        bool galois_over_p1) {
    if (genus < 2) throw InputError("genus must be at least 2");
    if (bp < Rational(0)) throw InputError("b_p must be nonnegative");
    return Rational(galois_over_p1 ? 2 : 2 * genus) * bp;
}

void validate_analytic_inputs(const AnalyticInputs& in) {
    if (in.genus < 2) throw InputError("genus must be at least 2");
    if (in.degree < 1) throw InputError("degree must be positive");
    if (in.field_degree < 1)
        throw InputError("field degree must be positive");
    if (in.deg_L < 1) throw InputError("deg L must be positive");
    if (in.cusps.empty()) throw InputError("cusp widths must be nonempty");
    long long total = 0;
    for (const auto& c : in.cusps) {
        if (c.width < 1)
            throw InputError("cusp " + c.name + " has non-positive width");
        if (c.order < 0)
            throw InputError("cusp " + c.name + " has negative order");
        total += c.width;
    }
    if (total != in.degree)
        throw WidthMismatch("cusp widths sum to " + std::to_string(total) +
                            ", expected the degree " +
                            std::to_string(in.degree));
}

BoundExpression jk_integral_bound(const AnalyticInputs& in) {
    validate_analytic_inputs(in);
    BoundExpression e;
    for (const auto& c : in.cusps) {
        if (c.width <= 1 || c.order == 0) continue;  // log 1 = 0
        e.add_term(Atom::sym_log(kKappa0Pi, c.width),
                   Rational(4 * c.order * c.width, in.genus));
    }
    e.add_term(Atom::sym("kappa"), Rational(in.degree, in.genus));
    return e;
}

BoundExpression analytic_bbeta_bound(const AnalyticInputs& in) {
    validate_analytic_inputs(in);
    BoundExpression e =
        in.L_self_intersection * Rational(-2 * in.genus, in.degree);
    for (const auto& c : in.cusps) {
        if (c.width <= 1) continue;
        e.add_term(Atom::sym_log(kKappa0Pi, c.width),
                   Rational(8 * c.width * in.field_degree, in.degree));
    }
    e.add_term(Atom::sym("kappa"), Rational(2 * in.field_degree));
    return e;
}

BoundExpression analytic_bbeta_simplified(const AnalyticInputs& in) {
    validate_analytic_inputs(in);
    long long b_max = 1;
    for (const auto& c : in.cusps) b_max = std::max(b_max, c.width);
    BoundExpression e;
    if (b_max > 1)
        e.add_term(Atom::sym_log("kappa1", b_max),
                   Rational(in.field_degree));
    e.add_term(Atom::sym("kappa2"), Rational(in.field_degree));
    return e.expand_logs();
}

double spectral_c_bound(double lambda1, double f_norm_sq, bool hyperbolic) {
    if (!(lambda1 > 0.0))
        throw NonPositiveLambda("lambda1 must be positive");
    if (f_norm_sq < 0.0)
        throw InputError("||f||^2 must be nonnegative");
    const double gap = hyperbolic ? std::min(lambda1, 0.25) : lambda1;
    return 2.0 / gap * f_norm_sq;
}

BoundExpression omega_total_bound(bool disc_present, long long field_degree,
                                  long long genus,
                                  const BoundExpression& analytic,
                                  const FormalLogSum& geometric,
                                  bool manin_drinfeld_asserted) {
    if (genus < 2) throw InputError("genus must be at least 2");
    if (field_degree < 1) throw InputError("field degree must be positive");
    if (!manin_drinfeld_asserted) throw ManinDrinfeldNotAsserted();
    BoundExpression inner;
    if (disc_present) inner.add_term(Atom::sym("logDisc"), Rational(2));
    inner += analytic;
    inner += BoundExpression::from_logsum(geometric);
    return inner * Rational(2 * genus - 2);
}

BoundExpression x0n_leading_term(long long genus, long long n) {
    if (genus < 2) throw InputError("genus must be at least 2");
    if (n < 2 || !is_square_free(n) || n % 2 == 0 || n % 3 == 0 ||
        prime_factors(n).size() < 2)
        throw InvalidCurveParameter(
            "N must be square-free, coprime to 6, with at least two prime "
            "factors");
    BoundExpression e;
    for (long long p : prime_factors(n)) {
        e.add_term(Atom::sym_log(kKappa0Pi, p), Rational(16 * genus));
        e.add_term(Atom::log(p), Rational(-genus));
    }
    return e;
}

}  // namespace arakelov
