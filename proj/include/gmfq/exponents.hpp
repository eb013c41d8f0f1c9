#pragma once

#include <cstdint>
#include <vector>

#include "gmfq/arith.hpp"
#include "gmfq/eigenform.hpp"
#include "gmfq/power_series.hpp"
#include "gmfq/rational.hpp"

namespace gmfq {

/// q-exponents c(n) of the weight-0 product expansion attached to an
/// eigenform, normalized to c0 = 1 and order 0 at infinity. n*c(n) is an
/// integer whenever the source coefficients are integers; c(1) = -b(1) = -1.
struct ExponentSeries {
    std::int64_t level = 0;
    std::vector<BigRational> c; // index 0 unused, kept 0

    std::int64_t bound() const { return static_cast<std::int64_t>(c.size()) - 1; }
    const BigRational& at(std::int64_t n) const;
};

/// n c(n) = -sum_{d|n} mu(d) b(n/d), generic rational input.
std::vector<BigRational> mobius_invert(const std::vector<BigRational>& b,
                                       const PrimeTable& table);

/// b(n) = -sum_{d|n} d c(d), generic rational input.
std::vector<BigRational> divisor_sum(const std::vector<BigRational>& c);

/// Exact c(n) for n = 1..bound from integer eigenform coefficients.
ExponentSeries exponents_from_eigenform(const Eigenform& form, std::int64_t bound,
                                        const PrimeTable& table);

/// Recover b(n) from exponents; integral whenever the exponents came from
/// an integral eigenform.
std::vector<BigRational> eigenform_from_exponents(const ExponentSeries& exponents,
                                                  std::int64_t bound);

/// c(p) = (1 - b(p)) / p. The prime-indexed view never needs divisor sums.
BigRational prime_exponent(std::int64_t bp, std::int64_t p);

/// Exponents of a unit series: Moebius inversion of its logarithmic
/// derivative. Inverse of expand_product on normalized input.
ExponentSeries exponents_from_series(const PowerSeries& series, const PrimeTable& table);

/// expand_product on an ExponentSeries (see power_series.hpp).
PowerSeries expand_product(const ExponentSeries& exponents, std::int64_t order);

} // namespace gmfq
