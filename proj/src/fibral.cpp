#include "arakelov/fibral.hpp"

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

// The pinned solve already verifies M x = t exactly; this re-checks the
// orthogonality statement from the raw crossing data.
void verify_orthogonality(const SpecialFiber& f, const SectionHit& s,
                          const RatVec& t, const RatVec& x) {
    const RatMatrix m = intersection_matrix(f);
    const RatVec mx = m.multiply(x);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (mx[i] != t[i])
            throw InternalCheckError("correction divisor for section " +
                                     s.name + " fails orthogonality");
}

VerticalDivisor solve_correction(const SpecialFiber& f, const SectionHit& s,
                                 const RatVec& target_degrees) {
    const RatMatrix m = intersection_matrix(f);
    RatVec t(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        t[i] = target_degrees[i] - Rational(s.hits_component(i));
    VerticalDivisor d;
    d.fiber = &f;
    d.pin = 0;
    d.coefficients = solve_singular_symmetric(m, t, 0);
    verify_orthogonality(f, s, t, d.coefficients);
    return d;
}

}  // namespace

VerticalDivisor solve_G(const SpecialFiber& f, const SectionHit& s,
                        long long d) {
    require_valid(f);
    if (d < 1) throw InputError("covering degree must be positive");
    Rational total;
    RatVec target(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& comp = f.components()[i];
        if (!comp.local_degree.has_value())
            throw InvalidFiber("component " + comp.name +
                               " carries no local degree");
        total += Rational(comp.multiplicity) * (*comp.local_degree);
        target[i] = *comp.local_degree / Rational(d);
    }
    if (total != Rational(d))
        throw InconsistentSystem("sum m_i * local_degree_i = " + total.str() +
                                 " differs from degree " +
                                 Rational(d).str());
    return solve_correction(f, s, target);
}

VerticalDivisor solve_F(const SpecialFiber& f, const SectionHit& s,
                        long long genus) {
    require_valid(f);
    if (genus < 2) throw InputError("genus must be at least 2");
    const RatVec omega = omega_restrictions(f, genus);
    RatVec target(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        target[i] = omega[i] / Rational(2 * genus - 2);
    return solve_correction(f, s, target);
}

FormalLogSum divisor_self_intersection(const VerticalDivisor& d) {
    FormalLogSum s;
    if (d.fiber == nullptr) return s;
    const Rational q =
        quadratic_form(intersection_matrix(*d.fiber), d.coefficients);
    if (!q.is_zero()) s.add_term(d.fiber->prime_norm(), q);
    return s;
}

GeometricContribution geometric_contribution(
    const std::vector<SpecialFiber>& fibers, long long genus, long long d) {
    if (genus < 2) throw InputError("genus must be at least 2");
    if (d < 1) throw InputError("covering degree must be positive");

    GeometricContribution out;
    const Rational g_factor = Rational(-2 * genus, d);
    const Rational f_factor = Rational(2 * genus - 2, d);

    for (const auto& fib : fibers) {
        require_valid(fib);
        long long width_total = 0;
        for (const auto& s : fib.sections()) {
            if (s.width < 1)
                throw WidthMismatch("section " + s.name +
                                    " carries no width");
            width_total += s.width;
        }
        if (width_total != d)
            throw WidthMismatch(
                "section widths sum to " + std::to_string(width_total) +
                " on the fiber above " + std::to_string(fib.prime_norm()) +
                ", expected the covering degree " + std::to_string(d));

        Rational sum_g2;  // sum_j b_j G_j^2 on this fiber
        Rational sum_f2;  // sum_j b_j F_j^2 on this fiber
        for (const auto& s : fib.sections()) {
            const Rational g2 = quadratic_form(
                intersection_matrix(fib), solve_G(fib, s, d).coefficients);
            const Rational f2 = quadratic_form(
                intersection_matrix(fib), solve_F(fib, s, genus).coefficients);
            out.per_cusp_G2[{fib.prime_norm(), s.name}] = g2;
            out.per_cusp_F2[{fib.prime_norm(), s.name}] = f2;
            sum_g2 += Rational(s.width) * g2;
            sum_f2 += Rational(s.width) * f2;
        }
        const Rational a_p = g_factor * sum_g2 + f_factor * sum_f2;
        if (!a_p.is_zero()) {
            out.per_prime[fib.prime_norm()] = a_p;
            out.value.add_term(fib.prime_norm(), a_p);
        }
    }
    return out;
}

}  // namespace arakelov
