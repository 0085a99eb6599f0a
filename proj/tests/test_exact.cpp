#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include <greenring/cyclotomic.hpp>
#include <greenring/numtheory.hpp>

using namespace greenring;

namespace {

// Random element of Q(w_n) for small n, built through the public arithmetic.
Cyclo random_cyclo(std::mt19937_64& rng, long max_conductor = 12) {
    std::uniform_int_distribution<long> nd(1, max_conductor);
    std::uniform_int_distribution<long> cd(-4, 4);
    long n = nd(rng);
    Cyclo acc(0);
    for (long k = 0; k < euler_phi(n); ++k) {
        long num = cd(rng);
        long den = 1 + (static_cast<long>(rng() % 3));
        if (num == 0) continue;
        acc += Cyclo(Rat(num, den)) * Cyclo::root_of_unity(n, k);
    }
    return acc;
}

double rel_err(std::complex<double> a, std::complex<double> b) {
    double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) / scale;
}

} // namespace

TEST_CASE("cyclotomic polynomials", "[cyclo]") {
    auto p1 = cyclotomic_polynomial(1);
    REQUIRE(p1 == std::vector<BigInt>{-1, 1}); // x - 1

    auto p4 = cyclotomic_polynomial(4);
    REQUIRE(p4 == std::vector<BigInt>{1, 0, 1}); // x^2 + 1

    auto p12 = cyclotomic_polynomial(12);
    REQUIRE(p12 == std::vector<BigInt>{1, 0, -1, 0, 1}); // x^4 - x^2 + 1

    // oracle: prod over d|n of Phi_d equals x^n - 1
    for (long n = 1; n <= 30; ++n) {
        std::vector<BigInt> prod{1};
        for (long d : divisors(n)) {
            auto f = cyclotomic_polynomial(d);
            std::vector<BigInt> next(prod.size() + f.size() - 1, BigInt(0));
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
            prod = std::move(next);
        }
        std::vector<BigInt> expect(n + 1, BigInt(0));
        expect[0] = -1;
        expect[n] = 1;
        REQUIRE(prod == expect);
        REQUIRE(cyclotomic_polynomial(n).size() == static_cast<size_t>(euler_phi(n) + 1));
    }
}

TEST_CASE("cyclotomic arithmetic basics", "[cyclo]") {
    Cyclo i = Cyclo::root_of_unity(4);
    REQUIRE(i * i == Cyclo(-1));

    Cyclo w3 = Cyclo::root_of_unity(3);
    REQUIRE(w3 + w3 * w3 == Cyclo(-1));

    // w_6 lives in Q(w_3): w_6 = 1 + w_3
    Cyclo w6 = Cyclo::root_of_unity(6);
    REQUIRE(w6.conductor() == 3);
    REQUIRE(w6 == Cyclo(1) + w3);
    REQUIRE(rel_err(w6.to_complex(), std::polar(1.0, 2 * 3.14159265358979323846 / 6)) < 1e-12);

    REQUIRE(Cyclo(Rat(5, 7)) + Cyclo(Rat(2, 7)) == Cyclo(1));
    REQUIRE((Cyclo(Rat(1, 2)) * Cyclo(Rat(2, 3))).rational_value() == Rat(1, 3));

    // conductor is minimal: w_8^2 = i has conductor 4
    REQUIRE(Cyclo::root_of_unity(8, 2) == i);
    REQUIRE(Cyclo::root_of_unity(8, 2).conductor() == 4);

    // sum of all n-th roots of unity vanishes
    for (long n : {2, 3, 4, 5, 6, 8, 9, 12}) {
        Cyclo s(0);
        for (long k = 0; k < n; ++k) s += Cyclo::root_of_unity(n, k);
        REQUIRE(s.is_zero());
    }
}

TEST_CASE("galois action on cyclotomics", "[cyclo]") {
    Cyclo w3 = Cyclo::root_of_unity(3);
    REQUIRE(w3.galois(2) == Cyclo(-1) - w3);

    REQUIRE(Cyclo(Rat(5, 7)).galois(3) == Cyclo(Rat(5, 7)));

    // (w_8^3): eighth power is 1, fourth power is -1
    Cyclo a = Cyclo::root_of_unity(8).galois(3);
    REQUIRE(a == Cyclo::root_of_unity(8, 3));
    Cyclo p4 = a * a * a * a;
    REQUIRE(p4 == Cyclo(-1));
    REQUIRE(p4 * p4 == Cyclo(1));

    REQUIRE_THROWS_AS(Cyclo::root_of_unity(8).galois(2), std::invalid_argument);
}

TEST_CASE("galois properties and float cross-check", "[cyclo]") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
        long m = std::lcm(a.conductor(), b.conductor());
        auto units = units_mod(m);
        long j = units[rng() % units.size()];
        long j2 = units[rng() % units.size()];

        // multiplicativity and composition of the Galois action
        REQUIRE((a * b).galois(j) == a.galois(j) * b.galois(j));
        REQUIRE((a + b).galois(j) == a.galois(j) + b.galois(j));
        REQUIRE(a.galois(j).galois(j2) == a.galois(j * j2 % m));

        // ring axioms
        Cyclo c = random_cyclo(rng);
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE((a * b) * c == a * (b * c));

        // exact arithmetic tracks complex floating point
        REQUIRE(rel_err((a * b + c).to_complex(),
                        a.to_complex() * b.to_complex() + c.to_complex()) < 1e-9);

        if (!a.is_zero()) {
            REQUIRE(a * a.inverse() == Cyclo(1));
        }
    }
}

TEST_CASE("reduction is canonical", "[cyclo]") {
    // the same value reached by different routes compares equal structurally
    Cyclo x = Cyclo::root_of_unity(12, 4); // = w_3
    REQUIRE(x.conductor() == 3);
    REQUIRE(x == Cyclo::root_of_unity(3));

    Cyclo y = Cyclo::root_of_unity(5) + Cyclo(2);
    Cyclo z = (y * Cyclo(3)) * Cyclo(Rat(1, 3));
    REQUIRE(y == z);
    REQUIRE(y.conductor() == 5);

    // real combinations drop to conductor 1
    Cyclo r = Cyclo::root_of_unity(7) ;
    Cyclo s = r;
    for (int k = 2; k <= 6; ++k) s += Cyclo::root_of_unity(7, k);
    REQUIRE(s == Cyclo(-1));
    REQUIRE(s.conductor() == 1);
}

TEST_CASE("unit lift for twists", "[cyclo]") {
    // j' ≡ j mod n and ≡ 1 mod d
    REQUIRE(unit_lift(2, 3, 4) == 5);
    REQUIRE(unit_lift(1, 12, 4) == 1);
    REQUIRE(unit_lift(5, 6, 1) == 5);
    REQUIRE(unit_lift(3, 4, 2) == 3);
    REQUIRE_THROWS_AS(unit_lift(3, 4, 4), std::invalid_argument); // 3 not ≡ 1 mod 4
    for (long n : {3L, 4L, 5L, 8L, 12L})
        for (long d : {1L, 3L, 4L, 8L}) {
            long g = std::gcd(n, d);
            for (long j : units_mod(n)) {
                if (j % g != 1 % g) continue;
                long lift = unit_lift(j, n, d);
                long L = std::lcm(n, d);
                REQUIRE(lift % n == j % n);
                REQUIRE(lift % d == 1 % d);
                REQUIRE(std::gcd(lift, L) == 1);
            }
        }
}
