#include "gmfq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmfq/errors.hpp"

namespace gmfq {

PrimeTable::PrimeTable(std::int64_t bound) : bound_(bound) {
    if (bound < 2) {
        throw DomainError("sieve bound must be >= 2, got " + std::to_string(bound));
    }
    spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (spf_[i] == 0) {
            primes_.push_back(i);
            spf_[i] = static_cast<std::int32_t>(i);
        }
        for (std::int64_t p : primes_) {
            if (p > spf_[i] || i * p > bound) break;
            spf_[i * p] = static_cast<std::int32_t>(p);
        }
    }
}

void PrimeTable::check_range(std::int64_t n) const {
    if (n < 1) throw DomainError("argument must be >= 1, got " + std::to_string(n));
    if (n > bound_) {
        throw DomainError("argument " + std::to_string(n) + " exceeds table bound " +
                          std::to_string(bound_));
    }
}

bool PrimeTable::is_prime(std::int64_t n) const {
    if (n < 2) return false;
    check_range(n);
    return spf_[n] == n;
}

std::int64_t PrimeTable::pi(std::int64_t x) const {
    if (x < 2) return 0;
    check_range(x);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::int64_t>(it - primes_.begin());
}

int PrimeTable::mobius(std::int64_t n) const {
    check_range(n);
    int factors = 0;
    while (n > 1) {
        std::int64_t p = spf_[n];
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    return (factors % 2 == 0) ? 1 : -1;
}

std::int64_t PrimeTable::sigma0(std::int64_t n) const {
    check_range(n);
    std::int64_t count = 1;
    while (n > 1) {
        std::int64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    return count;
}

std::vector<std::pair<std::int64_t, int>> PrimeTable::factor(std::int64_t n) const {
    check_range(n);
    std::vector<std::pair<std::int64_t, int>> out;
    while (n > 1) {
        std::int64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

PrimeTable sieve_primes(std::int64_t bound) { return PrimeTable(bound); }

double psi2(std::int64_t n) {
    if (n < 1) throw DomainError("psi2 requires n >= 1");
    double result = 1.0;
    double log2n = std::log(2.0 * static_cast<double>(n));
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result *= log2n / std::log(static_cast<double>(p));
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result *= log2n / std::log(static_cast<double>(m));
    return result;
}

} // namespace gmfq
