#include "gmfq/exponents.hpp"

#include <string>

#include "gmfq/errors.hpp"

namespace gmfq {

const BigRational& ExponentSeries::at(std::int64_t n) const {
    if (n < 1 || n > bound()) {
        throw ShapeError("exponent c(" + std::to_string(n) + ") not available, bound is " +
                         std::to_string(bound()));
    }
    return c[static_cast<std::size_t>(n)];
}

std::vector<BigRational> mobius_invert(const std::vector<BigRational>& b,
                                       const PrimeTable& table) {
    const std::int64_t bound = static_cast<std::int64_t>(b.size()) - 1;
    if (bound > table.bound()) throw ShapeError("prime table too small for Moebius inversion");
    std::vector<BigRational> c(b.size(), BigRational(0));
    // Sieve over d with mu(d) != 0: each (d, k) pair contributes mu(d) b(k)
    // to the divisor sum at n = d k.
    for (std::int64_t d = 1; d <= bound; ++d) {
        int mu = table.mobius(d);
        if (mu == 0) continue;
        for (std::int64_t n = d, k = 1; n <= bound; n += d, ++k) {
            if (mu > 0) {
                c[static_cast<std::size_t>(n)] -= b[static_cast<std::size_t>(k)];
            } else {
                c[static_cast<std::size_t>(n)] += b[static_cast<std::size_t>(k)];
            }
        }
    }
    for (std::int64_t n = 1; n <= bound; ++n) {
        c[static_cast<std::size_t>(n)] /= n;
    }
    return c;
}

std::vector<BigRational> divisor_sum(const std::vector<BigRational>& c) {
    const std::int64_t bound = static_cast<std::int64_t>(c.size()) - 1;
    std::vector<BigRational> b(c.size(), BigRational(0));
    for (std::int64_t d = 1; d <= bound; ++d) {
        if (c[static_cast<std::size_t>(d)] == 0) continue;
        BigRational dc = c[static_cast<std::size_t>(d)] * d;
        for (std::int64_t n = d; n <= bound; n += d) {
            b[static_cast<std::size_t>(n)] -= dc;
        }
    }
    return b;
}

ExponentSeries exponents_from_eigenform(const Eigenform& form, std::int64_t bound,
                                        const PrimeTable& table) {
    if (bound > form.bound()) {
        throw ShapeError("eigenform has coefficients to " + std::to_string(form.bound()) +
                         ", need " + std::to_string(bound));
    }
    if (bound > table.bound()) throw ShapeError("prime table too small for exponent conversion");
    // Integer accumulation of n c(n) = -sum mu(d) b(n/d), then one exact
    // division per n. |n c(n)| <= sqrt(n) sigma0(n)^2 keeps this in int64.
    std::vector<std::int64_t> ncn(static_cast<std::size_t>(bound) + 1, 0);
    for (std::int64_t d = 1; d <= bound; ++d) {
        int mu = table.mobius(d);
        if (mu == 0) continue;
        for (std::int64_t n = d, k = 1; n <= bound; n += d, ++k) {
            ncn[static_cast<std::size_t>(n)] -= mu * form.coeffs[static_cast<std::size_t>(k)];
        }
    }
    ExponentSeries out;
    out.level = form.level;
    out.c.assign(static_cast<std::size_t>(bound) + 1, BigRational(0));
    for (std::int64_t n = 1; n <= bound; ++n) {
        out.c[static_cast<std::size_t>(n)] = make_rational(ncn[static_cast<std::size_t>(n)], n);
    }
    return out;
}

std::vector<BigRational> eigenform_from_exponents(const ExponentSeries& exponents,
                                                  std::int64_t bound) {
    if (bound > exponents.bound()) {
        throw ShapeError("exponents known to " + std::to_string(exponents.bound()) + ", need " +
                         std::to_string(bound));
    }
    std::vector<BigRational> c(exponents.c.begin(),
                               exponents.c.begin() + static_cast<std::size_t>(bound) + 1);
    return divisor_sum(c);
}

BigRational prime_exponent(std::int64_t bp, std::int64_t p) {
    return make_rational(1 - bp, p);
}

ExponentSeries exponents_from_series(const PowerSeries& series, const PrimeTable& table) {
    PowerSeries g = series.log_deriv();
    std::vector<BigRational> b(g.coeffs());
    ExponentSeries out;
    out.level = 0;
    out.c = mobius_invert(b, table);
    return out;
}

PowerSeries expand_product(const ExponentSeries& exponents, std::int64_t order) {
    return expand_product(exponents.c, order);
}

} // namespace gmfq
