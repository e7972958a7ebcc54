#pragma once

#include <string>
#include <vector>

#include "arakelov/bounds.hpp"
#include "arakelov/fiber.hpp"
#include "arakelov/fibral.hpp"

namespace arakelov {

// Crossing number of the two component copies came out fractional or
// negative; the model data is inconsistent.
class NonIntegralCrossing : public InternalCheckError {
  public:
    using InternalCheckError::InternalCheckError;
};

// ---------------------------------------------------------------- X0(N) --

// Genus of X0(N) for square-free N coprime to 6 (any number of prime
// factors, including N prime and N = 1):
//   g = 1 + d/12 - eps2/4 - eps3/3 - sigma0(N)/2.
long long x0n_genus(long long n);

// Index d = prod_{p|N} (p + 1).
long long x0n_index(long long n);

struct X0NCusp {
    long long divisor = 1;  // e | N
    long long width = 1;    // N / e
};

// One cusp per divisor of N; widths sum to the index. Needs N square-free,
// coprime to 6, with at least two prime factors.
std::vector<X0NCusp> x0n_cusps(long long n);

// Reduction rule: the cusp for divisor e meets C_infinity iff p | e. Forced
// by matching section widths against the local degrees.
bool x0n_cusp_reduces_to_cinf(long long divisor, long long p);

// The fiber of X0(N) above p | N: two copies C0, Cinf of X0(N/p) plus
// F-lines and (G, H) chains depending on congruence flags, with all cusps
// attached as sections. Validated against the adjunction sum and the local
// degrees before returning.
SpecialFiber x0n_fiber(long long n, long long p);

struct X0NCuspSolution {
    std::string cusp;
    long long divisor = 1;
    long long width = 1;
    std::string component_hit;
    RatVec g_coefficients;
    Rational g_self_intersection;
    RatVec f_coefficients;
    Rational f_self_intersection;
};

struct X0NPrimeReport {
    long long p = 0;
    long long q_product = 0;  // prod (q_i + 1); defined alongside the model
                              // but unused by it, reported for transparency
    bool flag_u = false;
    bool flag_v = false;
    long long f_lines = 0;
    long long chain_pairs = 0;
    long long c0_cinf_crossing = 0;
    long long component_genus = 0;  // genus of X0(N/p)
    DualStats stats;
    Rational bp;
    std::vector<X0NCuspSolution> cusps;
    Rational sum_bj_g2;
    Rational sum_bj_g2_closed;  // -12 p / (p^2 - 1)
    Rational sum_bj_f2;
    Rational sum_bj_f2_closed;  // -3 (p + 1) / (p - 1)
    Rational a_p;
    Rational a_p_closed;
    Rational ap_bound;  // 2 g b_p
    bool lemma_g_ok = false;
    bool lemma_f_ok = false;
    bool a_p_ok = false;
    bool ap_within_bound = false;
};

struct X0NReport {
    long long n = 0;
    std::vector<long long> primes;
    long long genus = 0;
    long long index = 0;
    std::vector<X0NCusp> cusps;
    std::vector<X0NPrimeReport> per_prime;
    GeometricContribution geometric;
    FormalLogSum geometric_closed;
    bool closed_form_ok = false;
    BoundExpression analytic;
    BoundExpression analytic_simplified;
    BoundExpression total;
    BoundExpression leading_term;
    BoundExpression leading_coefficient;
    CurveBoundReport bound_report;

    bool all_checks_pass() const;
};

X0NReport x0n_report(long long n);

// Valid sweep levels: square-free, coprime to 6, >= 2 prime factors.
std::vector<long long> x0n_levels_up_to(long long max_n);

// ---------------------------------------------------------------- Fermat --

struct FermatParams {
    long long p = 0;
    long long r_max = 0;  // 4 + p(p-3)/2
    long long u = 0;      // p
    long long l = 1;
    long long c = 3;
};

FermatParams fermat_params(long long p);

long long fermat_genus(long long p);  // (p-1)(p-2)/2

struct FermatReport {
    FermatParams params;
    long long genus = 0;
    Rational bp_raw;          // compute_bp at the worst-case stats
    Rational envelope;        // p^7 / 2
    bool envelope_exceeded = false;
    Rational ap_envelope;     // 2 b_p (Galois cover of P^1)
    BoundExpression total;    // Theorem-shaped symbolic bound
};

FermatReport fermat_report(long long p);

BoundExpression fermat_omega_bound(long long p, long long genus);

// ------------------------------------------------------------------ X(N) --

struct XNParams {
    long long p = 0;
    long long k = 0;           // v_p(N)
    long long m = 0;           // N / p^k
    long long r = 0;           // p^k + p^{k-1}
    Rational s;                // supersingular point count, integral
    long long max_mult = 0;    // m_p = p^{2k-2}
    long long residue_degree = 0;   // f = ord of p mod m
    long long primes_above = 0;     // phi(m) / f
    Rational bp_envelope;      // (r-1)^2 m_p / s_p
};

// Parameters for every prime dividing N; requires N coprime to 6 with at
// least two distinct prime factors.
std::vector<XNParams> xn_params(long long n);

long long xn_genus(long long n);

struct XNReport {
    long long n = 0;
    long long genus = 0;
    long long field_degree = 0;  // [Q(zeta_N):Q] = phi(N)
    std::vector<XNParams> params;
    BoundExpression total;
};

XNReport xn_report(long long n);

BoundExpression xn_omega_bound(long long n);

}  // namespace arakelov
