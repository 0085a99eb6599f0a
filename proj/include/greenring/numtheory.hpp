#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace greenring {

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int a = 0;
            while (n % p == 0) { n /= p; ++a; }
            out.emplace_back(p, a);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long euler_phi(long n) {
    long r = n;
    for (auto [p, a] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int mobius(long n) {
    int m = 1;
    for (auto [p, a] : factorize(n)) {
        if (a > 1) return 0;
        m = -m;
    }
    return m;
}

// Units of Z/nZ, ascending. For the degenerate modulus 1 we report {1}; the
// only use is exponent-1 groups where every power map is the identity.
inline std::vector<long> units_mod(long n) {
    if (n <= 1) return {1};
    std::vector<long> out;
    for (long j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
    return out;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a % p, p - 2, p); // p prime
}

inline long smallest_primitive_root(long p) {
    if (p == 2) return 1;
    auto fac = factorize(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, a] : fac)
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::runtime_error("no primitive root found (p not prime?)");
}

// Smallest prime p ≡ 1 (mod m) with p > bound.
inline long prime_in_progression(long m, long bound) {
    long p = ((bound / m) + 1) * m + 1;
    if (m == 1) p = bound + 1;
    for (; p < (1L << 30); p += m) {
        if (p > bound && is_prime(p)) return p;
    }
    throw std::runtime_error("no prime found in progression");
}

// Unique j' mod lcm(n,d) with j' ≡ j (mod n) and j' ≡ 1 (mod d).
// Requires gcd(j,n)=1 and j ≡ 1 (mod gcd(n,d)); the result is a unit mod lcm.
inline long unit_lift(long j, long n, long d) {
    if (n <= 1 && d <= 1) return 1;
    long g = std::gcd(n, d);
    long jn = ((j % n) + n) % n;
    if (n > 1 && std::gcd(jn, n) != 1) throw std::invalid_argument("unit_lift: j not a unit mod n");
    if ((jn - 1) % g != 0) throw std::invalid_argument("unit_lift: j is not ≡ 1 mod gcd(n,d)");
    long L = n / g * d;
    if (n <= 1) return 1; // j' = 1 satisfies both congruences
    // solve x = jn + n*t ≡ 1 (mod d)
    long need = ((1 - jn) % d + d) % d;      // n*t ≡ need (mod d)
    long d2 = d / g, n2 = (n / g) % d2;
    long t = 0;
    if (d2 > 1) {
        // inverse of n2 mod d2 by brute force (moduli are tiny)
        long invn2 = -1;
        for (long x = 0; x < d2; ++x)
            if (n2 * x % d2 == 1 % d2) { invn2 = x; break; }
        if (invn2 < 0) throw std::runtime_error("unit_lift: inverse does not exist");
        t = (need / g) % d2 * invn2 % d2;
    }
    long x = (jn + n % L * t) % L;
    return x == 0 ? L : x;
}

} // namespace greenring
