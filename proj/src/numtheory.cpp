#include "arakelov/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "arakelov/errors.hpp"

namespace arakelov {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<long long, long long> factorize(long long n) {
    if (n < 1) throw InputError("factorize: argument must be positive");
    std::map<long long, long long> f;
    for (long long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (const auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

bool is_square_free(long long n) {
    if (n < 1) return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        long long pk = 1;
        for (long long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long long euler_phi(long long n) {
    long long result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

long long multiplicative_order(long long a, long long m) {
    if (m < 2 || std::gcd(a, m) != 1)
        throw InputError("multiplicative_order: arguments not coprime");
    long long x = a % m;
    if (x < 0) x += m;
    long long ord = 1;
    long long cur = x;
    while (cur != 1) {
        cur = (cur * x) % m;
        ++ord;
        if (ord > m) throw InternalCheckError("order search overran modulus");
    }
    return ord;
}

int legendre_minus_one(long long p) {
    return p % 4 == 1 ? 1 : -1;
}

int legendre_minus_three(long long p) {
    return p % 3 == 1 ? 1 : -1;
}

}  // namespace arakelov
