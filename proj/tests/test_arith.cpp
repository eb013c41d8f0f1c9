#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gmfq/arith.hpp"
#include "gmfq/errors.hpp"
#include "oracles.hpp"

using namespace gmfq;

TEST_CASE("sieve produces exactly the primes") {
    CHECK(sieve_primes(10).primes() == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2).primes() == std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(sieve_primes(1), DomainError);
    CHECK_THROWS_AS(sieve_primes(-5), DomainError);
}

TEST_CASE("sieve against trial division up to 10^6") {
    PrimeTable table(1000000);
    std::int64_t count = 0;
    for (std::int64_t n = 2; n <= 1000000; ++n) {
        if (oracle::is_prime_trial(n)) ++count;
    }
    CHECK(count == 78498);
    CHECK(static_cast<std::int64_t>(table.primes().size()) == count);
    for (std::size_t i = 1; i < table.primes().size(); ++i) {
        REQUIRE(table.primes()[i] > table.primes()[i - 1]);
    }
    // Spot-check membership both ways.
    for (std::int64_t p : {2, 97, 7919, 999983}) CHECK(table.is_prime(p));
    for (std::int64_t n : {1, 4, 1000000}) CHECK_FALSE(table.is_prime(n));
    CHECK(table.pi(1000000) == 78498);
    CHECK(table.pi(10) == 4);
    CHECK(table.pi(1) == 0);
}

TEST_CASE("smaller sieves are prefixes of larger ones") {
    PrimeTable big(5000);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(2, 5000);
    for (int i = 0; i < 20; ++i) {
        std::int64_t bound = dist(rng);
        PrimeTable small(bound);
        REQUIRE(small.primes().size() <= big.primes().size());
        for (std::size_t k = 0; k < small.primes().size(); ++k) {
            REQUIRE(small.primes()[k] == big.primes()[k]);
        }
    }
}

TEST_CASE("mobius values and the fundamental identity") {
    PrimeTable table(10000);
    CHECK(table.mobius(1) == 1);
    CHECK(table.mobius(4) == 0);
    CHECK(table.mobius(6) == 1);
    CHECK(table.mobius(30) == -1);
    CHECK_THROWS_AS(table.mobius(0), DomainError);

    for (std::int64_t n = 1; n <= 10000; ++n) {
        REQUIRE(table.mobius(n) == oracle::mobius_factored(n));
    }
    // sum_{d|n} mu(d) = [n == 1]
    for (std::int64_t n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (std::int64_t d : oracle::divisors(n)) sum += table.mobius(d);
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("sigma0 values and multiplicativity") {
    PrimeTable table(10000);
    CHECK(table.sigma0(1) == 1);
    CHECK(table.sigma0(12) == 6);
    CHECK(table.sigma0(720) == 30);
    CHECK_THROWS_AS(table.sigma0(0), DomainError);

    for (std::int64_t n : {1, 2, 36, 720, 5040, 9999}) {
        CHECK(table.sigma0(n) == static_cast<std::int64_t>(oracle::divisors(n).size()));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(1, 9999);
    int found = 0;
    while (found < 200) {
        std::int64_t m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1 || m * n > 10000) continue;
        REQUIRE(table.sigma0(m * n) == table.sigma0(m) * table.sigma0(n));
        ++found;
    }
}

TEST_CASE("factor returns the full factorization") {
    PrimeTable table(10000);
    auto f = table.factor(720);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 4});
    CHECK(f[1] == std::pair<std::int64_t, int>{3, 2});
    CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
    CHECK(table.factor(1).empty());
}

TEST_CASE("psi2 evaluates the log product") {
    CHECK(psi2(1) == doctest::Approx(1.0));
    CHECK(psi2(11) == doctest::Approx(std::log(22.0) / std::log(11.0)));
    CHECK(psi2(6) ==
          doctest::Approx(std::log(12.0) / std::log(2.0) * std::log(12.0) / std::log(3.0)));
    // Square factors do not enter twice.
    CHECK(psi2(4) == doctest::Approx(std::log(8.0) / std::log(2.0)));
}
