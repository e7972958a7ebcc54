#include "arakelov/curve_catalog.hpp"

#include <algorithm>

#include "arakelov/numtheory.hpp"

namespace arakelov {

namespace {

void require_x0n_level(long long n) {
    if (n < 2 || !is_square_free(n))
        throw InvalidCurveParameter("N must be square-free");
    if (n % 2 == 0 || n % 3 == 0)
        throw InvalidCurveParameter("N must be coprime to 6");
    if (prime_factors(n).size() < 2)
        throw InvalidCurveParameter(
            "N must have at least two different prime factors");
}

Rational genus_formula(long long n) {
    long long eps2 = 1;
    long long eps3 = 1;
    for (long long p : prime_factors(n)) {
        eps2 *= 1 + legendre_minus_one(p);
        eps3 *= 1 + legendre_minus_three(p);
    }
    const long long sigma0 = static_cast<long long>(divisors(n).size());
    return Rational(1) + Rational(x0n_index(n), 12) - Rational(eps2, 4) -
           Rational(eps3, 3) - Rational(sigma0, 2);
}

}  // namespace

long long x0n_genus(long long n) {
    if (n < 1 || !is_square_free(n) || (n > 1 && (n % 2 == 0 || n % 3 == 0)))
        throw InvalidCurveParameter(
            "genus formula needs square-free N coprime to 6");
    const Rational g = genus_formula(n);
    if (!g.is_integer() || g < Rational(0))
        throw InternalCheckError("genus formula returned a non-genus for N=" +
                                 std::to_string(n));
    return g.to_integer();
}

long long x0n_index(long long n) {
    if (n < 1 || !is_square_free(n))
        throw InvalidCurveParameter("index formula needs square-free N");
    long long d = 1;
    for (long long p : prime_factors(n)) d *= p + 1;
    return d;
}

std::vector<X0NCusp> x0n_cusps(long long n) {
    require_x0n_level(n);
    std::vector<X0NCusp> cusps;
    for (long long e : divisors(n)) cusps.push_back({e, n / e});
    long long total = 0;
    for (const auto& c : cusps) total += c.width;
    if (total != x0n_index(n))
        throw InternalCheckError("cusp widths do not sum to the index");
    return cusps;
}

bool x0n_cusp_reduces_to_cinf(long long divisor, long long p) {
    return divisor % p == 0;
}

SpecialFiber x0n_fiber(long long n, long long p) {
    require_x0n_level(n);
    if (!is_prime(p) || n % p != 0)
        throw InvalidCurveParameter("p must be a prime divisor of N");

    const long long m = n / p;
    const std::vector<long long> qs = prime_factors(m);
    const long long nu = static_cast<long long>(qs.size());
    const long long d = x0n_index(n);

    bool u = (p % 12 == 7 || p % 12 == 11);
    bool v = (p % 12 == 5 || p % 12 == 11);
    for (long long q : qs) {
        if (q % 4 != 1) u = false;
        if (q % 3 != 1) v = false;
    }
    const long long lines = 1LL << nu;  // 2^nu of each kind, when present

    // C0.Cinf = d (p-1) / (12 (p+1)) - 2^nu (u/2 + v/3)
    Rational crossing = Rational(d * (p - 1), 12 * (p + 1)) -
                        Rational(lines) * (Rational(u ? 1 : 0, 2) +
                                           Rational(v ? 1 : 0, 3));
    if (!crossing.is_integer() || crossing < Rational(0))
        throw NonIntegralCrossing(
            "C0.Cinf = " + crossing.str() + " for N=" + std::to_string(n) +
            ", p=" + std::to_string(p));
    const long long cc = crossing.to_integer();

    const long long component_genus = x0n_genus(m);

    std::vector<ComponentRecord> comps;
    comps.push_back({"C0", 1, component_genus, Rational(p * d, p + 1)});
    comps.push_back({"Cinf", 1, component_genus, Rational(d, p + 1)});
    if (u)
        for (long long i = 1; i <= lines; ++i)
            comps.push_back({"F" + std::to_string(i), 1, 0, Rational(0)});
    if (v)
        for (long long i = 1; i <= lines; ++i) {
            comps.push_back({"G" + std::to_string(i), 1, 0, Rational(0)});
            comps.push_back({"H" + std::to_string(i), 1, 0, Rational(0)});
        }

    SpecialFiber fiber(p, p, std::move(comps));
    fiber.set_crossing(0, 1, cc);
    std::size_t idx = 2;
    if (u)
        for (long long i = 0; i < lines; ++i, ++idx) {
            fiber.set_crossing(idx, 0, 1);
            fiber.set_crossing(idx, 1, 1);
        }
    if (v)
        for (long long i = 0; i < lines; ++i, idx += 2) {
            fiber.set_crossing(idx, 0, 1);          // G meets C0
            fiber.set_crossing(idx, idx + 1, 1);    // G meets its H
            fiber.set_crossing(idx + 1, 1, 1);      // H meets Cinf
        }

    long long width_to_cinf = 0;
    for (const auto& cusp : x0n_cusps(n)) {
        SectionHit s;
        s.name = "e" + std::to_string(cusp.divisor);
        s.width = cusp.width;
        const bool to_cinf = x0n_cusp_reduces_to_cinf(cusp.divisor, p);
        s.hits[to_cinf ? 1 : 0] = 1;
        if (to_cinf) width_to_cinf += cusp.width;
        fiber.add_section(std::move(s));
    }

    const auto violations = validate_fiber(fiber, Rational(d));
    if (!violations.empty())
        throw InternalCheckError("X0(N) fiber fails validation: " +
                                 violations.front().message);
    if (Rational(width_to_cinf) != Rational(d, p + 1))
        throw InternalCheckError(
            "cusp widths above Cinf do not match the local degree");
    omega_restrictions(fiber, x0n_genus(n));  // throws on genus mismatch
    return fiber;
}

bool X0NReport::all_checks_pass() const {
    if (!closed_form_ok) return false;
    for (const auto& pr : per_prime)
        if (!(pr.lemma_g_ok && pr.lemma_f_ok && pr.a_p_ok &&
              pr.ap_within_bound))
            return false;
    return true;
}

X0NReport x0n_report(long long n) {
    require_x0n_level(n);
    X0NReport rep;
    rep.n = n;
    rep.primes = prime_factors(n);
    rep.genus = x0n_genus(n);
    rep.index = x0n_index(n);
    rep.cusps = x0n_cusps(n);
    if (rep.genus < 2)
        throw InvalidCurveParameter("X0(" + std::to_string(n) +
                                    ") has genus below 2");

    std::vector<SpecialFiber> fibers;
    fibers.reserve(rep.primes.size());
    for (long long p : rep.primes) fibers.push_back(x0n_fiber(n, p));

    rep.geometric = geometric_contribution(fibers, rep.genus, rep.index);

    for (std::size_t fi = 0; fi < fibers.size(); ++fi) {
        const SpecialFiber& fiber = fibers[fi];
        const long long p = rep.primes[fi];
        X0NPrimeReport pr;
        pr.p = p;
        pr.q_product = rep.index / (p + 1);
        pr.c0_cinf_crossing = fiber.crossing(0, 1);
        pr.component_genus = fiber.components()[0].genus;
        long long f_count = 0, gh_count = 0;
        for (const auto& c : fiber.components()) {
            if (c.name[0] == 'F') ++f_count;
            if (c.name[0] == 'G') ++gh_count;
        }
        pr.flag_u = f_count > 0;
        pr.flag_v = gh_count > 0;
        pr.f_lines = f_count;
        pr.chain_pairs = gh_count;
        pr.stats = dual_graph_stats(fiber);
        pr.bp = compute_bp(pr.stats);

        for (const auto& s : fiber.sections()) {
            X0NCuspSolution sol;
            sol.cusp = s.name;
            sol.divisor = std::stoll(s.name.substr(1));
            sol.width = s.width;
            sol.component_hit =
                fiber.components()[s.hits.begin()->first].name;
            const VerticalDivisor g_div = solve_G(fiber, s, rep.index);
            const VerticalDivisor f_div = solve_F(fiber, s, rep.genus);
            sol.g_coefficients = g_div.coefficients;
            sol.f_coefficients = f_div.coefficients;
            sol.g_self_intersection =
                rep.geometric.per_cusp_G2.at({p, s.name});
            sol.f_self_intersection =
                rep.geometric.per_cusp_F2.at({p, s.name});
            pr.sum_bj_g2 += Rational(s.width) * sol.g_self_intersection;
            pr.sum_bj_f2 += Rational(s.width) * sol.f_self_intersection;
            pr.cusps.push_back(std::move(sol));
        }

        pr.sum_bj_g2_closed = Rational(-12 * p, p * p - 1);
        pr.sum_bj_f2_closed = Rational(-3 * (p + 1), p - 1);
        pr.lemma_g_ok = pr.sum_bj_g2 == pr.sum_bj_g2_closed;
        pr.lemma_f_ok = pr.sum_bj_f2 == pr.sum_bj_f2_closed;

        pr.a_p = rep.geometric.per_prime.count(p)
                     ? rep.geometric.per_prime.at(p)
                     : Rational(0);
        // Prop-style closed form, per prime:
        //   a_p = (2/d) (12 g p/(p^2-1) - 6(g-1)/(p-1) - 3(g-1)).
        pr.a_p_closed =
            Rational(2, rep.index) *
            (Rational(12 * rep.genus * p, p * p - 1) -
             Rational(6 * (rep.genus - 1), p - 1) -
             Rational(3 * (rep.genus - 1)));
        pr.a_p_ok = pr.a_p == pr.a_p_closed;

        pr.ap_bound = ap_upper_bound(rep.genus, pr.bp, false);
        pr.ap_within_bound = pr.a_p <= pr.ap_bound;

        rep.geometric_closed.add_term(p, pr.a_p_closed);
        rep.per_prime.push_back(std::move(pr));
    }
    rep.closed_form_ok = rep.geometric.value == rep.geometric_closed;

    AnalyticInputs in;
    in.genus = rep.genus;
    in.degree = rep.index;
    in.field_degree = 1;
    in.deg_L = 1;
    // Lbar^2 on X(1) enters only through the O(g) constants; carried as
    // exact zero here so the assembled bound is fully evaluable.
    in.L_self_intersection = BoundExpression();
    for (const auto& c : rep.cusps)
        in.cusps.push_back({"e" + std::to_string(c.divisor), c.width, 1});
    rep.analytic = analytic_bbeta_bound(in);
    rep.analytic_simplified = analytic_bbeta_simplified(in);
    rep.total = omega_total_bound(true, 1, rep.genus, rep.analytic,
                                  rep.geometric.value, true);
    rep.leading_term = x0n_leading_term(rep.genus, n);
    rep.leading_coefficient.add_term(Atom::sym("kappa0*pi"),
                                     Rational(16 * rep.genus));
    rep.leading_coefficient.add_term(Atom::unit(), Rational(-rep.genus));

    rep.bound_report.genus = rep.genus;
    rep.bound_report.degree = rep.index;
    rep.bound_report.geometric = rep.geometric.value;
    rep.bound_report.analytic = rep.analytic;
    rep.bound_report.total = rep.total;
    rep.bound_report.leading_log_coefficient = rep.leading_coefficient;
    return rep;
}

std::vector<long long> x0n_levels_up_to(long long max_n) {
    std::vector<long long> out;
    for (long long n = 2; n <= max_n; ++n)
        if (is_square_free(n) && n % 2 != 0 && n % 3 != 0 &&
            prime_factors(n).size() >= 2)
            out.push_back(n);
    return out;
}

FermatParams fermat_params(long long p) {
    if (!is_prime(p) || p < 5)
        throw InvalidCurveParameter("Fermat exponent must be a prime >= 5");
    return {p, 4 + p * (p - 3) / 2, p, 1, 3};
}

long long fermat_genus(long long p) {
    return (p - 1) * (p - 2) / 2;
}

namespace {

Rational p_to_the_seventh(long long p) {
    Rational power(1);
    for (int i = 0; i < 7; ++i) power *= Rational(p);
    return power;
}

}  // namespace

BoundExpression fermat_omega_bound(long long p, long long genus) {
    if (!is_prime(p) || p < 5)
        throw InvalidCurveParameter("Fermat exponent must be a prime >= 5");
    if (genus < 2) throw InputError("genus must be at least 2");
    BoundExpression inner;
    inner.add_term(Atom::sym("logDisc"), Rational(2));
    inner.add_term(Atom::sym_log("kappa1", p), Rational(p - 1));
    inner.add_term(Atom::sym("kappa2"), Rational(p - 1));
    inner.add_term(Atom::log(p), Rational(genus) * p_to_the_seventh(p));
    return inner * Rational(2 * genus - 2);
}

FermatReport fermat_report(long long p) {
    FermatReport rep;
    rep.params = fermat_params(p);
    rep.genus = fermat_genus(p);
    rep.bp_raw = compute_bp(
        {rep.params.r_max, rep.params.u, rep.params.l, rep.params.c});
    rep.envelope = p_to_the_seventh(p) / Rational(2);
    rep.envelope_exceeded = rep.bp_raw > rep.envelope;
    rep.ap_envelope = ap_upper_bound(rep.genus, rep.bp_raw, true);
    rep.total = fermat_omega_bound(p, rep.genus);
    return rep;
}

long long xn_genus(long long n) {
    if (n < 7) throw InvalidCurveParameter("X(N) genus needs N >= 7 here");
    // mu = (N^3/2) prod (1 - 1/p^2); g = 1 + mu (N - 6) / (12 N).
    Rational mu = Rational(n) * Rational(n) * Rational(n) / Rational(2);
    for (long long p : prime_factors(n))
        mu *= Rational(p * p - 1, p * p);
    const Rational g =
        Rational(1) + mu * Rational(n - 6) / (Rational(12) * Rational(n));
    if (!g.is_integer() || g < Rational(2))
        throw InternalCheckError("X(N) genus formula failed for N=" +
                                 std::to_string(n));
    return g.to_integer();
}

std::vector<XNParams> xn_params(long long n) {
    if (n % 2 == 0 || n % 3 == 0)
        throw InvalidCurveParameter("N must be coprime to 6");
    const auto factorization = factorize(n);
    if (factorization.size() < 2)
        throw InvalidCurveParameter(
            "N must have at least two different prime factors");
    std::vector<XNParams> out;
    for (const auto& [p, k] : factorization) {
        XNParams pr;
        pr.p = p;
        pr.k = k;
        long long pk = 1;
        for (long long i = 0; i < k; ++i) pk *= p;
        pr.m = n / pk;
        pr.r = pk + pk / p;
        if (pk / p > 3'000'000'000LL)
            throw InvalidCurveParameter(
                "p^(k-1) too large for the multiplicity bound");
        pr.max_mult = (pk / p) * (pk / p);
        Rational s = Rational(p - 1, 24) * Rational(pr.m) * Rational(pr.m) *
                     Rational(euler_phi(pr.m));
        for (long long q : prime_factors(pr.m))
            s *= Rational(q + 1, q);
        if (!s.is_integer() || s <= Rational(0))
            throw InvalidCurveParameter(
                "supersingular count s_p = " + s.str() +
                " is not a positive integer for N=" + std::to_string(n));
        pr.s = s;
        pr.residue_degree = multiplicative_order(p % pr.m, pr.m);
        pr.primes_above = euler_phi(pr.m) / pr.residue_degree;
        pr.bp_envelope = Rational((pr.r - 1) * (pr.r - 1)) *
                         Rational(pr.max_mult) / pr.s;
        out.push_back(std::move(pr));
    }
    return out;
}

BoundExpression xn_omega_bound(long long n) {
    return xn_report(n).total;
}

XNReport xn_report(long long n) {
    XNReport rep;
    rep.n = n;
    rep.params = xn_params(n);
    rep.genus = xn_genus(n);
    rep.field_degree = euler_phi(n);

    BoundExpression inner;
    inner.add_term(Atom::sym("logDisc"), Rational(2));
    // [K:Q] (kappa1 log N + kappa2) with log N expanded into prime atoms.
    BoundExpression width_part;
    width_part.add_term(Atom::sym_log("kappa1", n), Rational(1));
    width_part = width_part.expand_logs();
    inner += width_part * Rational(rep.field_degree);
    inner.add_term(Atom::sym("kappa2"), Rational(rep.field_degree));
    // 2 sum_{P | p} b_P log Nm(P): each rational prime p contributes
    // phi(m) log p in total across the primes above it.
    for (const auto& pr : rep.params)
        inner.add_term(Atom::log(pr.p),
                       Rational(2) * pr.bp_envelope *
                           Rational(euler_phi(pr.m)));
    rep.total = inner * Rational(2 * rep.genus - 2);
    return rep;
}

}  // namespace arakelov
