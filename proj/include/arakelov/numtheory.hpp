#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace arakelov {

bool is_prime(long long n);

// Prime factorization by trial division; key = prime, value = exponent.
std::map<long long, long long> factorize(long long n);

std::vector<long long> prime_factors(long long n);

bool is_square_free(long long n);

std::vector<long long> divisors(long long n);

long long euler_phi(long long n);

// Multiplicative order of a mod m; requires gcd(a, m) = 1.
long long multiplicative_order(long long a, long long m);

// Legendre symbols used by the X0(N) genus formula, p > 3 prime.
int legendre_minus_one(long long p);   // (-1/p)
int legendre_minus_three(long long p); // (-3/p)

}  // namespace arakelov
