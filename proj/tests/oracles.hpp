#pragma once

// Independent reference implementations used only to generate expected
// values for tests. Everything here is deliberately naive and kept free of
// the code paths it checks.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "gmfq/eigenform.hpp"
#include "gmfq/rational.hpp"

namespace gmfq::oracle {

inline bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius_factored(std::int64_t n) {
    int count = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count % 2 == 0 ? 1 : -1;
}

// Dense truncated product of rational polynomials, schoolbook.
inline std::vector<BigRational> poly_mul(const std::vector<BigRational>& a,
                                         const std::vector<BigRational>& b,
                                         std::size_t order) {
    std::vector<BigRational> out(order + 1, BigRational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// (1 - q^n)^c for rational c via the generalized binomial series:
// sum_k binom(c, k) (-1)^k q^{nk}.
inline std::vector<BigRational> binomial_factor(const BigRational& c, std::int64_t n,
                                                std::size_t order) {
    std::vector<BigRational> out(order + 1, BigRational(0));
    out[0] = 1;
    BigRational coeff(1);
    for (std::int64_t k = 1; static_cast<std::size_t>(n * k) <= order; ++k) {
        // binom(c, k) = binom(c, k-1) * (c - k + 1) / k, alternating sign folded in.
        coeff *= (c - (k - 1)) / k;
        BigRational term = coeff;
        if (k % 2 == 1) term = -term;
        out[static_cast<std::size_t>(n * k)] = term;
    }
    return out;
}

// prod_{n=1}^{order} (1 - q^n)^{c(n)} with rational exponents, expanded by
// multiplying the binomial series of every factor.
inline std::vector<BigRational> product_expansion_binomial(const std::vector<BigRational>& c,
                                                           std::size_t order) {
    std::vector<BigRational> acc(order + 1, BigRational(0));
    acc[0] = 1;
    for (std::int64_t n = 1; static_cast<std::size_t>(n) <= order; ++n) {
        if (c[static_cast<std::size_t>(n)] == 0) continue;
        acc = poly_mul(acc, binomial_factor(c[static_cast<std::size_t>(n)], n, order), order);
    }
    return acc;
}

// Eta-quotient expansion by explicit truncated Euler products, no
// pentagonal shortcut. Positive exponents only.
inline std::vector<BigRational> eta_expansion_naive(const std::vector<EtaFactor>& factors,
                                                    std::size_t order) {
    std::vector<BigRational> acc(order + 1, BigRational(0));
    acc[0] = 1;
    std::int64_t h24 = 0;
    for (const auto& f : factors) h24 += f.m * f.r;
    std::size_t h = static_cast<std::size_t>(h24 / 24);
    for (const auto& f : factors) {
        std::vector<BigRational> euler(order + 1, BigRational(0));
        euler[0] = 1;
        for (std::int64_t n = 1; static_cast<std::size_t>(f.m * n) <= order; ++n) {
            std::vector<BigRational> lin(order + 1, BigRational(0));
            lin[0] = 1;
            lin[static_cast<std::size_t>(f.m * n)] = -1;
            euler = poly_mul(euler, lin, order);
        }
        for (std::int64_t i = 0; i < f.r; ++i) acc = poly_mul(acc, euler, order);
    }
    std::vector<BigRational> out(order + 1, BigRational(0));
    for (std::size_t i = 0; i + h <= order; ++i) out[i + h] = acc[i];
    return out;
}

// Affine enumeration of the long Weierstrass model, independent of the
// residue-table scan in the library.
inline std::int64_t ap_enumeration(const EllipticCurve& e, std::int64_t p) {
    auto reduce = [p](std::int64_t v) {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    };
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t rhs = reduce(((x + e.a2) * x + e.a4) * x + e.a6);
        for (std::int64_t y = 0; y < p; ++y) {
            if (reduce(y * y + e.a1 * x * y + e.a3 * y) == rhs) ++count;
        }
    }
    return p + 1 - count;
}

// Composite Simpson quadrature of (2/pi) sqrt(1 - t^2) over [a, b].
inline double st_mass_quadrature(double a, double b, int panels = 20000) {
    auto density = [](double t) {
        double s = 1.0 - t * t;
        return s <= 0.0 ? 0.0 : 2.0 / 3.14159265358979323846 * std::sqrt(s);
    };
    double h = (b - a) / (2 * panels);
    double sum = density(a) + density(b);
    for (int i = 1; i < 2 * panels; ++i) {
        sum += density(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

// Naive mpq reference arithmetic for the series fast paths.
inline std::vector<BigRational> series_mul_naive(const std::vector<BigRational>& a,
                                                 const std::vector<BigRational>& b) {
    std::vector<BigRational> out(a.size(), BigRational(0));
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) out[n] += a[k] * b[n - k];
    }
    return out;
}

inline std::vector<BigRational> series_invert_naive(const std::vector<BigRational>& a) {
    std::vector<BigRational> out(a.size(), BigRational(0));
    out[0] = BigRational(1) / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        BigRational sum(0);
        for (std::size_t k = 1; k <= n; ++k) sum += a[k] * out[n - k];
        out[n] = -sum / a[0];
    }
    return out;
}

} // namespace gmfq::oracle
