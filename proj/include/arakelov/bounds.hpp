#pragma once

#include <string>
#include <vector>

#include "arakelov/bound_expr.hpp"
#include "arakelov/fiber.hpp"
#include "arakelov/log_sum.hpp"
#include "arakelov/rational.hpp"

namespace arakelov {

class NonPositiveLambda : public InputError {
  public:
    using InputError::InputError;
};

// Combinatorial envelope built from the dual-graph statistics:
//   b_p = ( sum_{k=1}^{c} T_k^2 + (r-c-1) T_c^2 ) * u / l^2,
// where T_k = sum_{i=1}^{k} (u/l)^{i-1}. Requires r >= 2, c >= 1 and
// r - c - 1 >= 0.
Rational compute_bp(const DualStats& stats);

// a_p <= 2g b_p in general; a_p <= 2 b_p for a Galois cover of P^1.
Rational ap_upper_bound(long long genus, const Rational& bp,
                        bool galois_over_p1);

struct CuspAnalytic {
    std::string name;
    long long width = 1;   // b_j
    long long order = 1;   // ord_{f(S_j)}(l)
};

// Inputs shared by the analytic bounds.
struct AnalyticInputs {
    long long genus = 2;
    long long degree = 1;        // d
    long long field_degree = 1;  // [K:Q]
    std::vector<CuspAnalytic> cusps;
    BoundExpression L_self_intersection;  // Lbar^2 on the base
    long long deg_L = 1;
};

void validate_analytic_inputs(const AnalyticInputs& in);

// Integral bound of the sup-norm estimate:
//   int -log||l|| nu_can <= 4 pi kappa0 sum_j ord_j b_j log(b_j) / g
//                           + (d/g) kappa.
BoundExpression jk_integral_bound(const AnalyticInputs& in);

// b_beta <= -(2g/d) Lbar^2 + [K:Q] (8 pi kappa0 sum_j b_j log b_j / d
//                                   + 2 kappa).
BoundExpression analytic_bbeta_bound(const AnalyticInputs& in);

// Simplified form [K:Q] (kappa1 log b_max + kappa2), logs expanded into
// prime atoms.
BoundExpression analytic_bbeta_simplified(const AnalyticInputs& in);

// (2/lambda1) ||f||^2, with lambda1 replaced by min(lambda1, 1/4) in the
// hyperbolic case. Numeric-only companion of the exact spectral check.
double spectral_c_bound(double lambda1, double f_norm_sq, bool hyperbolic);

// Total bound (2g-2)(2 logDisc + analytic + geometric). The caller must
// assert the Manin-Drinfeld property (cuspidal divisors torsion); the
// Neron-Tate height terms are then exactly zero.
BoundExpression omega_total_bound(bool disc_present, long long field_degree,
                                  long long genus,
                                  const BoundExpression& analytic,
                                  const FormalLogSum& geometric,
                                  bool manin_drinfeld_asserted);

// Leading term g (16 pi kappa0 - 1) log N with log N expanded into prime
// atoms; N must be square-free, coprime to 6, with at least two prime
// factors.
BoundExpression x0n_leading_term(long long genus, long long n);

// Per-curve bound summary assembled by the catalog.
struct CurveBoundReport {
    long long genus = 0;
    long long degree = 0;
    FormalLogSum geometric;
    BoundExpression analytic;
    BoundExpression total;
    // Coefficient of the dominant log atom, e.g. 16g kappa0*pi - g.
    BoundExpression leading_log_coefficient;
};

}  // namespace arakelov
