#pragma once

#include <cstdint>
#include <vector>

#include "gmfq/rational.hpp"

namespace gmfq {

/// Truncated formal power series over the rationals, coefficients 0..order.
///
/// Arithmetic is exact; floats never enter this module. The truncation
/// order is part of the value: binary operations require equal orders.
class PowerSeries {
public:
    explicit PowerSeries(std::int64_t order);
    PowerSeries(std::int64_t order, std::vector<BigRational> coeffs);

    static PowerSeries one(std::int64_t order);

    std::int64_t order() const { return order_; }
    const BigRational& coeff(std::int64_t n) const;
    void set_coeff(std::int64_t n, BigRational value);
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    /// Cauchy product truncated at the common order.
    friend PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

    /// Quotient series, by forward substitution; requires a unit divisor.
    /// Equal to mul(numerator, denominator.invert()) but far cheaper when
    /// the quotient has small coefficients, which is exactly the
    /// log-derivative situation.
    friend PowerSeries divide(const PowerSeries& numerator, const PowerSeries& denominator);

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries invert() const;

    /// q a'/a: the n-th numerator coefficient is n*a[n], divided by a.
    PowerSeries log_deriv() const;

    bool operator==(const PowerSeries& other) const = default;

private:
    std::int64_t order_;
    std::vector<BigRational> coeffs_; // size order_+1
};

PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries divide(const PowerSeries& numerator, const PowerSeries& denominator);

/// Fourier expansion of prod_{n>=1} (1 - q^n)^{c(n)} truncated at `order`,
/// normalized to constant term 1 (c0 = 1, h = 0). `exponents` is indexed
/// 1..order; entry 0 is ignored. Uses the log-derivative recurrence
///   n a(n) = -sum_{m=1}^{n} a(n-m) * A(m),  A(m) = sum_{d|m} d c(d).
PowerSeries expand_product(const std::vector<BigRational>& exponents, std::int64_t order);

} // namespace gmfq
