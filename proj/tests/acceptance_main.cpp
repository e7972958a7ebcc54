// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every equality below is exact rational equality unless a tolerance is
// stated on the line.

#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arakelov/bounds.hpp"
#include "arakelov/curve_catalog.hpp"
#include "arakelov/fibral.hpp"
#include "arakelov/green.hpp"
#include "arakelov/numtheory.hpp"

using namespace arakelov;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
              << ": " << detail << "\n";
    if (!pass) ++failures;
}

void note(const std::string& text) {
    std::cout << "       note: " << text << "\n";
}

std::vector<X0NReport> sweep_reports() {
    std::vector<X0NReport> reports;
    for (long long n : x0n_levels_up_to(200)) reports.push_back(x0n_report(n));
    return reports;
}

void criterion_1_lemma_g(const std::vector<X0NReport>& sweep) {
    bool ok = true;
    int pairs = 0;
    for (const auto& rep : sweep)
        for (const auto& pr : rep.per_prime) {
            ++pairs;
            if (pr.sum_bj_g2 != Rational(-12 * pr.p, pr.p * pr.p - 1))
                ok = false;
        }
    std::ostringstream os;
    os << "sum b_j G_j^2 = -12p/(p^2-1) exactly on " << sweep.size()
       << " levels, " << pairs << " (N, p) pairs";
    report(1, ok && pairs > 0, os.str());
}

void criterion_2_lemma_f(const std::vector<X0NReport>& sweep) {
    bool ok = true;
    int pairs = 0;
    for (const auto& rep : sweep)
        for (const auto& pr : rep.per_prime) {
            ++pairs;
            if (pr.sum_bj_f2 != Rational(-3 * (pr.p + 1), pr.p - 1))
                ok = false;
        }
    // Spot anchor: N = 35, p = 5 gives -9/2 as the log 5 coefficient.
    bool anchor = false;
    for (const auto& rep : sweep)
        if (rep.n == 35)
            anchor = rep.per_prime[0].sum_bj_f2 == Rational(-9, 2);
    std::ostringstream os;
    os << "sum b_j F_j^2 = -3(p+1)/(p-1) exactly on " << pairs
       << " pairs; anchor N=35, p=5: -9/2 "
       << (anchor ? "confirmed" : "MISSED");
    report(2, ok && anchor, os.str());
}

void criterion_3_prop_x0n(const std::vector<X0NReport>& sweep) {
    bool ok = true;
    for (const auto& rep : sweep)
        if (!rep.closed_form_ok || !rep.all_checks_pass()) ok = false;

    Rational a5, a7;
    for (const auto& rep : sweep)
        if (rep.n == 35) {
            a5 = rep.geometric.per_prime.at(5);
            a7 = rep.geometric.per_prime.at(7);
        }
    const bool anchor5 = a5 == Rational(-1, 16);
    // The stated oracle is the closed form
    //   a_p = (2/d)(12 g p/(p^2-1) - 6(g-1)/(p-1) - 3(g-1)),
    // which at N=35, p=7 (g=3, d=48) evaluates to -11/96.
    const Rational a7_oracle = Rational(2, 48) * (Rational(12 * 3 * 7, 48) -
                                                  Rational(12, 6) -
                                                  Rational(6));
    const bool anchor7 = a7 == a7_oracle && a7_oracle == Rational(-11, 96);

    std::ostringstream os;
    os << "solver-assembled sum a_p log p equals the closed form exactly on "
       << sweep.size() << " levels; anchors a_5 = " << a5.str()
       << ", a_7 = " << a7.str();
    report(3, ok && anchor5 && anchor7, os.str());
    note("a_7 = -11/96 is pinned by two independent routes (solver assembly "
         "and the closed form); reusing the p=5 value of sum b_j F_j^2 at "
         "p=7 would give -5/32 instead, which both routes rule out");
}

void criterion_4_adjunction(const std::vector<X0NReport>& sweep) {
    bool ok = true;
    int fibers = 0;
    for (const auto& rep : sweep)
        for (long long p : rep.primes) {
            ++fibers;
            const SpecialFiber f = x0n_fiber(rep.n, p);
            const RatVec omega = omega_restrictions(f, rep.genus);
            Rational total;
            for (std::size_t i = 0; i < f.size(); ++i)
                total += Rational(f.components()[i].multiplicity) * omega[i];
            if (total != Rational(2 * rep.genus - 2)) ok = false;
        }
    std::ostringstream os;
    os << "sum m_i (2 p_a - 2 - C_i^2) = 2g-2 exactly on " << fibers
       << " generated fibers";
    report(4, ok, os.str());
}

void criterion_5_bp_checks() {
    const bool basic = compute_bp({2, 1, 1, 1}) == Rational(1);

    bool xn_form = true;
    for (long long r = 2; r <= 10; ++r)
        for (long long m = 1; m <= 4; ++m)
            for (long long s = 1; s <= 5; ++s)
                if (compute_bp({r, (r - 1) * m * s, s, 1}) !=
                    Rational((r - 1) * (r - 1) * m, s))
                    xn_form = false;

    const FermatReport f5 = fermat_report(5);
    const bool fermat5 = f5.bp_raw == Rational(29015) &&
                         f5.bp_raw <= Rational(78125, 2) &&
                         !f5.envelope_exceeded;

    const FermatReport f7 = fermat_report(7);
    const bool both_reported = f7.bp_raw == Rational(341600) &&
                               f7.envelope == Rational(823543, 2);
    // The comparison path itself must fire when the raw value exceeds the
    // envelope (synthetic stats).
    const bool flag_fires = compute_bp({4000, 7, 1, 3}) > Rational(823543, 2);

    std::ostringstream os;
    os << "b_p formula checks pass; Fermat p=5: 29015 <= 39062.5; p=7 report "
          "carries raw "
       << f7.bp_raw.str() << " vs envelope " << f7.envelope.str() << " (flag "
       << (f7.envelope_exceeded ? "ENVELOPE_EXCEEDED" : "OK")
       << "), exceedance flag verified on synthetic stats";
    report(5, basic && xn_form && fermat5 && both_reported && flag_fires,
           os.str());
    note("at the worst-case stats (18,7,1,3) the formula gives 341600 <= "
         "411771.5, so the p=7 envelope holds and the flag stays off; the "
         "exceedance path is exercised with synthetic stats instead");
}

void criterion_6_geom_bound(const std::vector<X0NReport>& sweep) {
    bool ok = true;
    int checks = 0;
    for (const auto& rep : sweep)
        for (const auto& pr : rep.per_prime) {
            ++checks;
            if (!(pr.a_p <= ap_upper_bound(rep.genus, pr.bp, false)))
                ok = false;
        }
    std::ostringstream os;
    os << "a_p <= 2g b_p on all " << checks << " sweep instances";
    report(6, ok, os.str());
}

void criterion_7_green() {
    const auto start = std::chrono::steady_clock::now();
    const GreenSelftest st = run_green_selftest(12, 20260810, 500);
    bool ok = st.all_pass && st.trials.size() == 500;

    const double lambda_tol = 1e-10;
    DiscreteSurface s;
    s.dirichlet_form = RatMatrix(2, 2);
    s.dirichlet_form(0, 0) = Rational(1);
    s.dirichlet_form(0, 1) = Rational(-1);
    s.dirichlet_form(1, 0) = Rational(-1);
    s.dirichlet_form(1, 1) = Rational(1);
    s.base_measure = {Rational(1, 2), Rational(1, 2)};
    const SpectralCheck anchor = spectral_bound_check(
        s, s.base_measure, {Rational(3, 4), Rational(1, 4)});
    const bool anchor_ok =
        anchor.c_exact == Rational(1, 16) &&
        std::abs(anchor.lambda1 - 4.0) <= lambda_tol * 4.0 &&
        std::abs(anchor.bound_resolvent - 1.0 / 16) <= 1e-9 &&
        anchor.sandwich_ok;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    std::ostringstream os;
    os << "500 random surfaces (n <= 12): all Green identities exact, all "
          "spectral sandwiches hold; 2-point anchor c = 1/16 with tight "
          "resolvent bound ("
       << seconds << " s)";
    report(7, ok && anchor_ok && seconds < 30.0, os.str());
}

void criterion_8_kernel_shifts() {
    std::mt19937_64 rng(4242);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        std::vector<ComponentRecord> comps;
        for (std::size_t i = 0; i < n; ++i)
            comps.push_back({"c" + std::to_string(i),
                             static_cast<long long>(1 + rng() % 2), 0,
                             std::nullopt});
        SpecialFiber f(2 + rng() % 96, 2, std::move(comps));
        for (std::size_t i = 1; i < n; ++i)
            f.set_crossing(i, rng() % i, 1 + rng() % 3);
        const RatMatrix m = intersection_matrix(f);
        const RatVec mult = f.multiplicity_vector();

        // Right-hand side orthogonal to the multiplicity kernel.
        RatVec t(n);
        Rational acc;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            t[i] = Rational(static_cast<long long>(rng() % 13) - 6,
                            1 + rng() % 6);
            acc += t[i] * mult[i];
        }
        t[n - 1] = -acc / mult[n - 1];

        const RatVec x0 = solve_singular_symmetric(m, t, 0);
        const Rational base = quadratic_form(m, x0);
        const std::size_t pin = rng() % n;
        if (quadratic_form(m, solve_singular_symmetric(m, t, pin)) != base)
            ok = false;

        // Explicit random kernel shift of the solved divisor.
        const Rational c(static_cast<long long>(rng() % 13) - 6,
                         1 + rng() % 6);
        RatVec shifted = x0;
        for (std::size_t i = 0; i < n; ++i) shifted[i] += c * mult[i];
        if (quadratic_form(m, shifted) != base) ok = false;
    }
    report(8, ok,
           "divisor self-intersections are pin-independent and "
           "kernel-shift-invariant on 200 random fibers (exact)");
}

void criterion_9_leading_term() {
    const X0NReport rep = x0n_report(35);
    const Rational sixteen_g(16 * rep.genus);
    bool ok = true;
    for (long long p : {5LL, 7LL}) {
        if (rep.leading_term.coefficient(Atom::sym_log("kappa0*pi", p)) !=
            sixteen_g)
            ok = false;
        if (rep.leading_term.coefficient(Atom::log(p)) !=
            Rational(-rep.genus))
            ok = false;
    }
    const double numeric = rep.leading_term.eval({{"kappa0", 1.0}});
    const double expected =
        (16 * std::numbers::pi - 1) * 3 * std::log(35.0);
    ok = ok && std::abs(numeric - expected) < 1e-9;
    std::ostringstream os;
    os << "leading-term expression at N=35 carries 16g = 48 on kappa0*pi "
          "log p and -g = -3 on log p for p = 5, 7, matching the "
          "(16 pi kappa0 - 1) g log N shape";
    report(9, ok, os.str());
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<X0NReport> sweep = sweep_reports();
    criterion_1_lemma_g(sweep);
    criterion_2_lemma_f(sweep);
    criterion_3_prop_x0n(sweep);
    criterion_4_adjunction(sweep);
    criterion_5_bp_checks();
    criterion_6_geom_bound(sweep);
    criterion_7_green();
    criterion_8_kernel_shifts();
    criterion_9_leading_term();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (" << seconds << " s, sweep of " << sweep.size()
              << " levels)\n";
    return failures == 0 ? 0 : 1;
}
