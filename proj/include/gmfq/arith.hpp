#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gmfq {

/// Primes up to a fixed bound plus a smallest-prime-factor table.
///
/// The SPF table makes mobius() and sigma0() O(log n) per query, which
/// matters because the exponent conversions query both for every n up to
/// the truncation bound. All queries are const and safe to share across
/// threads once constructed.
class PrimeTable {
public:
    explicit PrimeTable(std::int64_t bound);

    std::int64_t bound() const { return bound_; }
    const std::vector<std::int64_t>& primes() const { return primes_; }

    bool is_prime(std::int64_t n) const;

    /// pi(x): number of primes <= x. Requires x <= bound().
    std::int64_t pi(std::int64_t x) const;

    /// Moebius function, 0 on non-squarefree n.
    int mobius(std::int64_t n) const;

    /// Number of positive divisors.
    std::int64_t sigma0(std::int64_t n) const;

    /// (prime, exponent) pairs in ascending prime order.
    std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) const;

private:
    void check_range(std::int64_t n) const;

    std::int64_t bound_;
    std::vector<std::int64_t> primes_;
    std::vector<std::int32_t> spf_;
};

/// Convenience wrapper matching the operation name used throughout.
PrimeTable sieve_primes(std::int64_t bound);

/// psi2(N) = prod over distinct primes p | N of log(2N)/log(p).
/// Empty product (N = 1) is 1. Double precision is enough: the value only
/// feeds inequality reports, never exact arithmetic.
double psi2(std::int64_t n);

} // namespace gmfq
