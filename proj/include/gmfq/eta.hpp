#pragma once

#include <cstdint>
#include <vector>

#include "gmfq/power_series.hpp"
#include "gmfq/rational.hpp"

namespace gmfq {

struct EtaFactor {
    std::int64_t m; // argument multiplier: the factor is eta(m z), as a q-product
    std::int64_t r; // exponent, may be negative

    bool operator==(const EtaFactor&) const = default;
};

/// Product q^h * prod_m prod_{n>=1} (1 - q^{mn})^{r_m} with h = sum m r / 24.
///
/// This is the q-expansion of an eta quotient; it backs the catalogue of
/// weight-2 eigenforms. Expansion uses the pentagonal-number form of each
/// Euler factor, so a single factor costs O(order * sqrt(order/m)) integer
/// additions rather than a full series multiplication.
class EtaQuotient {
public:
    explicit EtaQuotient(std::vector<EtaFactor> factors);

    const std::vector<EtaFactor>& factors() const { return factors_; }

    /// Leading q-power sum(m r)/24.
    BigRational order_at_infinity() const;

    /// sum(r)/2.
    BigRational weight() const;

    /// Integer-coefficient expansion through q^order. Requires the leading
    /// power to be a non-negative integer.
    std::vector<BigInt> expand_integer(std::int64_t order) const;

    /// Same expansion as a PowerSeries.
    PowerSeries expand(std::int64_t order) const;

private:
    std::vector<EtaFactor> factors_;
};

} // namespace gmfq
