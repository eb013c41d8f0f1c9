#include "gmfq/power_series.hpp"

#include <string>

#include "gmfq/errors.hpp"

namespace gmfq {

namespace {

// Rational series as integer numerators over one shared denominator.
// Convolutions then run on mpz values, which avoids the per-operation
// gcd work mpq arithmetic would do; coefficients are reduced back to
// canonical rationals only when they leave this representation. This is
// what keeps the order-2000 identities affordable: the expansion of a
// product with rational exponents carries denominators of thousands of
// bits per coefficient.
struct ScaledSeries {
    BigInt den = 1;
    std::vector<BigInt> num;

    explicit ScaledSeries(std::size_t size) : num(size) {}

    explicit ScaledSeries(const std::vector<BigRational>& coeffs) : num(coeffs.size()) {
        for (const auto& c : coeffs) {
            den = lcm(den, BigInt(c.get_den()));
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
        }
    }

    // Grow the shared denominator so that `value` is representable.
    void absorb(std::size_t upto, const BigRational& value) {
        BigInt extra = value.get_den() / gcd(den, BigInt(value.get_den()));
        if (extra != 1) {
            den *= extra;
            for (std::size_t i = 0; i < upto; ++i) num[i] *= extra;
        }
    }
};

} // namespace

PowerSeries::PowerSeries(std::int64_t order) : order_(order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

PowerSeries::PowerSeries(std::int64_t order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw DomainError("series order must be >= 0");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
        throw ShapeError("coefficient count " + std::to_string(coeffs_.size()) +
                         " does not match order " + std::to_string(order));
    }
}

PowerSeries PowerSeries::one(std::int64_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

const BigRational& PowerSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > order_) {
        throw ShapeError("coefficient index " + std::to_string(n) + " out of range");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries::set_coeff(std::int64_t n, BigRational value) {
    if (n < 0 || n > order_) {
        throw ShapeError("coefficient index " + std::to_string(n) + " out of range");
    }
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    if (a.order_ != b.order_) {
        throw ShapeError("order mismatch: " + std::to_string(a.order_) + " vs " +
                         std::to_string(b.order_));
    }
    const std::int64_t order = a.order_;
    ScaledSeries sa(a.coeffs_);
    ScaledSeries sb(b.coeffs_);
    BigInt den = sa.den * sb.den;

    PowerSeries out(order);
    BigInt acc;
    for (std::int64_t n = 0; n <= order; ++n) {
        acc = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            if (sa.num[k] != 0 && sb.num[n - k] != 0) {
                mpz_addmul(acc.get_mpz_t(), sa.num[k].get_mpz_t(), sb.num[n - k].get_mpz_t());
            }
        }
        out.coeffs_[n] = make_rational(acc, den);
    }
    return out;
}

PowerSeries divide(const PowerSeries& numerator, const PowerSeries& denominator) {
    if (numerator.order_ != denominator.order_) {
        throw ShapeError("order mismatch: " + std::to_string(numerator.order_) + " vs " +
                         std::to_string(denominator.order_));
    }
    if (denominator.coeffs_[0] == 0) {
        throw DomainError("cannot divide by a series with zero constant term");
    }
    const std::int64_t order = numerator.order_;
    ScaledSeries sv(denominator.coeffs_); // v[k] = sv.num[k] / sv.den
    ScaledSeries sq(denominator.coeffs_.size()); // quotient on a running denominator
    const BigInt& v0 = sv.num[0];

    PowerSeries out(order);
    out.coeffs_[0] = numerator.coeffs_[0] / denominator.coeffs_[0];
    sq.absorb(0, out.coeffs_[0]);
    sq.num[0] = out.coeffs_[0].get_num() * (sq.den / out.coeffs_[0].get_den());

    BigInt acc, t;
    for (std::int64_t n = 1; n <= order; ++n) {
        // q(n) = (u(n) - sum_{k=1}^{n} v(k) q(n-k)) / v(0); the convolution
        // runs on the scaled integers, so sum = acc / (sv.den * sq.den).
        acc = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            if (sv.num[k] != 0 && sq.num[n - k] != 0) {
                mpz_addmul(acc.get_mpz_t(), sv.num[k].get_mpz_t(), sq.num[n - k].get_mpz_t());
            }
        }
        const BigRational& un = numerator.coeffs_[n];
        // (u - acc/(Dv Dq)) Dv/v0 = (u.num Dv Dq - acc u.den) / (u.den Dq v0)
        t = un.get_num() * sv.den * sq.den - acc * un.get_den();
        out.coeffs_[n] = make_rational(t, BigInt(un.get_den()) * sq.den * v0);
        sq.absorb(static_cast<std::size_t>(n), out.coeffs_[n]);
        sq.num[n] = out.coeffs_[n].get_num() * (sq.den / out.coeffs_[n].get_den());
    }
    return out;
}

PowerSeries PowerSeries::invert() const {
    if (coeffs_[0] == 0) {
        throw DomainError("cannot invert a series with zero constant term");
    }
    return divide(PowerSeries::one(order_), *this);
}

PowerSeries PowerSeries::log_deriv() const {
    if (coeffs_[0] == 0) {
        throw DomainError("log derivative needs a nonzero constant term");
    }
    PowerSeries scaled(order_);
    for (std::int64_t n = 0; n <= order_; ++n) {
        scaled.coeffs_[n] = coeffs_[n] * n;
    }
    return divide(scaled, *this);
}

PowerSeries expand_product(const std::vector<BigRational>& exponents, std::int64_t order) {
    if (static_cast<std::int64_t>(exponents.size()) < order + 1) {
        throw ShapeError("need exponents up to n = " + std::to_string(order) + ", got " +
                         std::to_string(exponents.size() - 1));
    }
    // A(m) = sum_{d|m} d c(d), by a divisor sieve.
    std::vector<BigRational> a_sum(static_cast<std::size_t>(order) + 1, BigRational(0));
    for (std::int64_t d = 1; d <= order; ++d) {
        if (exponents[d] == 0) continue;
        BigRational dc = exponents[d] * d;
        for (std::int64_t m = d; m <= order; m += d) {
            a_sum[m] += dc;
        }
    }
    ScaledSeries sA(a_sum);
    ScaledSeries sa(static_cast<std::size_t>(order) + 1);
    PowerSeries out(order);
    out.set_coeff(0, BigRational(1));
    sa.num[0] = 1;

    BigInt acc;
    for (std::int64_t n = 1; n <= order; ++n) {
        // n a(n) = -sum_{m=1}^{n} a(n-m) A(m)
        acc = 0;
        for (std::int64_t m = 1; m <= n; ++m) {
            if (sA.num[m] != 0 && sa.num[n - m] != 0) {
                mpz_addmul(acc.get_mpz_t(), sA.num[m].get_mpz_t(), sa.num[n - m].get_mpz_t());
            }
        }
        BigRational an = make_rational(-acc, sa.den * sA.den * n);
        out.set_coeff(n, an);
        sa.absorb(static_cast<std::size_t>(n), an);
        sa.num[n] = an.get_num() * (sa.den / an.get_den());
    }
    return out;
}

} // namespace gmfq
