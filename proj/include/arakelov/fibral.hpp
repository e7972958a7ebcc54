#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arakelov/fiber.hpp"
#include "arakelov/linalg.hpp"
#include "arakelov/log_sum.hpp"

namespace arakelov {

// Rational coefficient vector on fiber components, well-defined modulo the
// full fiber; normalized by coefficients[pin] = 0.
struct VerticalDivisor {
    const SpecialFiber* fiber = nullptr;
    std::size_t pin = 0;
    RatVec coefficients;
};

// Correction divisor G_j: the unique pinned solution of
//   (S_j + G_j - (1/d) beta^* infinity) . C_i = 0  for every component C_i,
// i.e. M x = t with t_i = local_degree_i / d - S_j.C_i.
VerticalDivisor solve_G(const SpecialFiber& f, const SectionHit& s,
                        long long d);

// Correction divisor F_j: same system against the canonical bundle,
//   t_i = (omega . C_i)/(2g-2) - S_j.C_i.
VerticalDivisor solve_F(const SpecialFiber& f, const SectionHit& s,
                        long long genus);

// Fibral arithmetic self-intersection (x^T M x) * log Nm(p) as a
// single-atom log sum; empty for the zero divisor.
FormalLogSum divisor_self_intersection(const VerticalDivisor& d);

// sum_p a_p log Nm(p) together with its per-prime and per-cusp breakdown:
//   sum_p a_p log Nm(p) = -(2g/d) sum_j b_j G_j^2 + ((2g-2)/d) sum_j b_j F_j^2
struct GeometricContribution {
    FormalLogSum value;
    std::map<long long, Rational> per_prime;  // prime norm -> a_p
    std::map<std::pair<long long, std::string>, Rational> per_cusp_G2;
    std::map<std::pair<long long, std::string>, Rational> per_cusp_F2;
};

GeometricContribution geometric_contribution(
    const std::vector<SpecialFiber>& fibers, long long genus, long long d);

}  // namespace arakelov
