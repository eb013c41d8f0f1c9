#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmfq/arith.hpp"
#include "gmfq/eigenform.hpp"
#include "gmfq/exponents.hpp"
#include "gmfq/rational.hpp"

namespace gmfq {

/// Closed subinterval of [-1, 1].
struct Interval {
    double lo = -1.0;
    double hi = 1.0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t count = 0;
    double empirical = 0.0; // count / sample
    double expected = 0.0;  // Sato-Tate mass of [lo, hi]
};

struct SatoTateReport {
    std::string form;
    std::int64_t level = 0;
    std::int64_t xmax = 0;
    int nbins = 0;
    std::int64_t sample = 0; // good primes counted
    std::vector<HistogramBin> bins;
    double discrepancy = 0.0; // sup over bins of |empirical - expected|
    std::vector<std::int64_t> excluded; // primes dividing the level
};

/// Sign statistics of c(p) for one form, or of c1(p) c2(p) for a pair.
/// Ratios are against pi(xmax); densities are natural-density estimates at
/// the largest computed x, not analytic densities.
struct SignDensityReport {
    std::vector<std::int64_t> levels;
    std::int64_t xmax = 0;
    std::int64_t pi_x = 0;
    std::int64_t n_pos = 0;
    std::int64_t n_neg = 0;
    std::int64_t n_zero = 0;
    // pair runs only: counts for the >=0 / <=0 partitions and the number of
    // primes where sign(c1(p)) != sign(c2(p)).
    std::optional<std::int64_t> n_geq, n_leq, n_disagree;
    std::vector<std::int64_t> excluded;

    double ratio_pos() const { return pi_x ? static_cast<double>(n_pos) / pi_x : 0.0; }
    double ratio_neg() const { return pi_x ? static_cast<double>(n_neg) / pi_x : 0.0; }
    double ratio_zero() const { return pi_x ? static_cast<double>(n_zero) / pi_x : 0.0; }
};

struct JointDensity {
    Interval i1, i2;
    std::int64_t count = 0;
    std::int64_t pi_x = 0;
    double empirical = 0.0; // count / pi(x)
    double product = 0.0;   // st_measure(i1) * st_measure(i2)
};

struct BandCount {
    std::int64_t count = 0;
    std::int64_t pi_x = 0;
    double ratio = 0.0;
};

struct DistinctValueCount {
    std::int64_t positive = 0;          // #{good p <= x : c(p) > 0}
    std::int64_t negative = 0;          // #{good p <= x : c(p) < 0}
    std::int64_t distinct_positive = 0; // distinct values among the positives
    std::int64_t distinct_negative = 0;
};

struct IntegralityReport {
    std::int64_t level = 0;
    std::int64_t limit = 0;
    std::vector<std::pair<std::int64_t, BigInt>> integral_exponents; // c(n) in Z \ {0}
    std::vector<std::int64_t> size_bound_violations;   // n > 2 sqrt(n) sigma0(n)^3
    std::vector<std::int64_t> growth_bound_violations; // |n c(n)| > sqrt(n) sigma0(n)^2
};

struct BoundReport {
    std::int64_t level = 0;
    std::int64_t search_bound = 0;
    std::optional<std::int64_t> d1; // first n > 1 with c(n) > 0; empty = inconclusive range
    std::int64_t d2 = 0;            // first n with c(n) < 0 (always 1 for normalized input)
    double bound_38 = 0.0;          // (4N)^{3/8}
    double psi2 = 0.0;
    double n0 = 0.0; // N^5 log^10 N exp(log(N+1)/loglog(N+2)) max{psi2, 4 sqrt(N) log^16(2N)}
    bool level_squarefree = true;
};

/// Sato-Tate mass of [a, b]: (1/pi)(arcsin t + t sqrt(1-t^2)) evaluated at
/// the endpoints. Requires -1 <= a <= b <= 1.
double st_measure(double a, double b);
double st_measure(const Interval& interval);

/// B(p) = b(p) / (2 sqrt(p)). Deligne guarantees |B(p)| <= 1 for genuine
/// eigenform data; a violation is an integrity error, not a domain error.
double normalize_bp(std::int64_t bp, std::int64_t p);

SatoTateReport st_histogram(const Eigenform& form, std::int64_t xmax, int nbins,
                            const PrimeTable& table);

SignDensityReport sign_density(const Eigenform& form, std::int64_t xmax, const PrimeTable& table);

/// Product-sign statistics of c1(p) c2(p) over primes coprime to both levels.
SignDensityReport pair_sign_density(const Eigenform& f1, const Eigenform& f2, std::int64_t xmax,
                                    const PrimeTable& table);

/// Empirical mass of {p : B1(p) in i1, B2(p) in i2} against the product of
/// the Sato-Tate masses.
JointDensity pair_joint_histogram(const Eigenform& f1, const Eigenform& f2, std::int64_t xmax,
                                  const Interval& i1, const Interval& i2, const PrimeTable& table);

/// Good primes with 0 <= B(p) < 1/(2 sqrt(p)); for integer coefficients this
/// is exactly the set with b(p) = 0.
BandCount boundary_band_count(const Eigenform& form, std::int64_t xmax, const PrimeTable& table);

/// (p, c(p)) for every good p <= xmax with b(p) = 0 on a CM form; each c(p)
/// is recomputed through the generic divisor-sum route and checked to equal
/// 1/p exactly.
std::vector<std::pair<std::int64_t, BigRational>> cm_value_scan(const Eigenform& form,
                                                                std::int64_t xmax,
                                                                const PrimeTable& table);

DistinctValueCount distinct_values_count(const Eigenform& form, std::int64_t xmax,
                                         const PrimeTable& table);

IntegralityReport integrality_scan(const ExponentSeries& exponents, std::int64_t limit,
                                   const PrimeTable& table);

/// First sign changes of c(n) plus the level-dependent bounds they are
/// reported against. The N0 expression takes the absolute constant as 1;
/// it is informational, never asserted.
BoundReport first_sign_change(const ExponentSeries& exponents, std::int64_t level,
                              const PrimeTable& table);

} // namespace gmfq
