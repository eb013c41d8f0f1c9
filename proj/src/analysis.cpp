#include "gmfq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "gmfq/errors.hpp"

namespace gmfq {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::int64_t> excluded_primes(std::int64_t level, std::int64_t xmax,
                                          const PrimeTable& table) {
    std::vector<std::int64_t> out;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (level != 0 && level % p == 0) out.push_back(p);
    }
    return out;
}

void require_coeffs(const Eigenform& form, std::int64_t xmax) {
    if (form.bound() < xmax) {
        throw ShapeError("form has coefficients to " + std::to_string(form.bound()) +
                         ", need " + std::to_string(xmax));
    }
}

void require_non_cm(const Eigenform& form, const char* what) {
    if (form.cm) {
        throw DomainError(std::string(what) + " requires a non-CM form; level " +
                          std::to_string(form.level) + " has CM");
    }
}

double st_cdf_primitive(double t) { return std::asin(t) + t * std::sqrt(1.0 - t * t); }

} // namespace

double st_measure(double a, double b) {
    if (!(a >= -1.0 && a <= b && b <= 1.0)) {
        throw DomainError("st_measure needs -1 <= a <= b <= 1");
    }
    return (st_cdf_primitive(b) - st_cdf_primitive(a)) / kPi;
}

double st_measure(const Interval& interval) { return st_measure(interval.lo, interval.hi); }

double normalize_bp(std::int64_t bp, std::int64_t p) {
    if (bp * bp > 4 * p) {
        throw IntegrityError("Deligne bound violated: b(p) = " + std::to_string(bp) +
                             " at p = " + std::to_string(p));
    }
    return static_cast<double>(bp) / (2.0 * std::sqrt(static_cast<double>(p)));
}

SatoTateReport st_histogram(const Eigenform& form, std::int64_t xmax, int nbins,
                            const PrimeTable& table) {
    require_non_cm(form, "st_histogram");
    require_coeffs(form, xmax);
    if (nbins < 1) throw DomainError("need at least one bin");

    SatoTateReport report;
    report.form = form.source + ":" + std::to_string(form.level);
    report.level = form.level;
    report.xmax = xmax;
    report.nbins = nbins;
    report.excluded = excluded_primes(form.level, xmax, table);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(nbins), 0);
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!form.good_prime(p)) continue;
        double value = normalize_bp(form.coeff(p), p);
        auto bin = static_cast<std::int64_t>((value + 1.0) / 2.0 * nbins);
        bin = std::clamp<std::int64_t>(bin, 0, nbins - 1);
        ++counts[static_cast<std::size_t>(bin)];
        ++report.sample;
    }

    report.bins.resize(static_cast<std::size_t>(nbins));
    for (int i = 0; i < nbins; ++i) {
        HistogramBin& bin = report.bins[static_cast<std::size_t>(i)];
        bin.lo = -1.0 + 2.0 * i / nbins;
        bin.hi = -1.0 + 2.0 * (i + 1) / nbins;
        bin.count = counts[static_cast<std::size_t>(i)];
        bin.empirical = report.sample ? static_cast<double>(bin.count) / report.sample : 0.0;
        bin.expected = st_measure(bin.lo, bin.hi);
        report.discrepancy = std::max(report.discrepancy, std::abs(bin.empirical - bin.expected));
    }
    return report;
}

SignDensityReport sign_density(const Eigenform& form, std::int64_t xmax, const PrimeTable& table) {
    require_coeffs(form, xmax);
    SignDensityReport report;
    report.levels = {form.level};
    report.xmax = xmax;
    report.pi_x = xmax >= 2 ? table.pi(xmax) : 0;
    report.excluded = excluded_primes(form.level, xmax, table);
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!form.good_prime(p)) continue;
        // sign(c(p)) = sign(1 - b(p)) since c(p) = (1 - b(p))/p.
        std::int64_t s = 1 - form.coeff(p);
        if (s > 0) {
            ++report.n_pos;
        } else if (s < 0) {
            ++report.n_neg;
        } else {
            ++report.n_zero;
        }
    }
    return report;
}

SignDensityReport pair_sign_density(const Eigenform& f1, const Eigenform& f2, std::int64_t xmax,
                                    const PrimeTable& table) {
    require_non_cm(f1, "pair_sign_density");
    require_non_cm(f2, "pair_sign_density");
    require_coeffs(f1, xmax);
    require_coeffs(f2, xmax);
    if (f1.level == f2.level && f1.coeffs == f2.coeffs) {
        throw DomainError("degenerate pair: the two forms coincide");
    }
    SignDensityReport report;
    report.levels = {f1.level, f2.level};
    report.xmax = xmax;
    report.pi_x = xmax >= 2 ? table.pi(xmax) : 0;
    report.n_geq = 0;
    report.n_leq = 0;
    report.n_disagree = 0;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!f1.good_prime(p) || !f2.good_prime(p)) {
            report.excluded.push_back(p);
            continue;
        }
        std::int64_t s1 = 1 - f1.coeff(p);
        std::int64_t s2 = 1 - f2.coeff(p);
        std::int64_t product = s1 * s2;
        if (product > 0) {
            ++report.n_pos;
        } else if (product < 0) {
            ++report.n_neg;
        } else {
            ++report.n_zero;
        }
        if (product >= 0) ++*report.n_geq;
        if (product <= 0) ++*report.n_leq;
        int sign1 = (s1 > 0) - (s1 < 0);
        int sign2 = (s2 > 0) - (s2 < 0);
        if (sign1 != sign2) ++*report.n_disagree;
    }
    return report;
}

JointDensity pair_joint_histogram(const Eigenform& f1, const Eigenform& f2, std::int64_t xmax,
                                  const Interval& i1, const Interval& i2,
                                  const PrimeTable& table) {
    require_non_cm(f1, "pair_joint_histogram");
    require_non_cm(f2, "pair_joint_histogram");
    require_coeffs(f1, xmax);
    require_coeffs(f2, xmax);
    if (f1.level == f2.level && f1.coeffs == f2.coeffs) {
        throw DomainError("degenerate pair: the two forms coincide");
    }
    JointDensity result;
    result.i1 = i1;
    result.i2 = i2;
    result.product = st_measure(i1) * st_measure(i2);
    result.pi_x = xmax >= 2 ? table.pi(xmax) : 0;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!f1.good_prime(p) || !f2.good_prime(p)) continue;
        double b1 = normalize_bp(f1.coeff(p), p);
        double b2 = normalize_bp(f2.coeff(p), p);
        if (b1 >= i1.lo && b1 <= i1.hi && b2 >= i2.lo && b2 <= i2.hi) ++result.count;
    }
    result.empirical = result.pi_x ? static_cast<double>(result.count) / result.pi_x : 0.0;
    return result;
}

BandCount boundary_band_count(const Eigenform& form, std::int64_t xmax, const PrimeTable& table) {
    require_coeffs(form, xmax);
    BandCount result;
    result.pi_x = xmax >= 2 ? table.pi(xmax) : 0;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!form.good_prime(p)) continue;
        // 0 <= B(p) < 1/(2 sqrt p)  <=>  0 <= b(p) < 1, i.e. b(p) = 0.
        std::int64_t bp = form.coeff(p);
        if (bp >= 0 && bp < 1) ++result.count;
    }
    result.ratio = result.pi_x ? static_cast<double>(result.count) / result.pi_x : 0.0;
    return result;
}

std::vector<std::pair<std::int64_t, BigRational>> cm_value_scan(const Eigenform& form,
                                                                std::int64_t xmax,
                                                                const PrimeTable& table) {
    if (!form.cm) {
        throw DomainError("cm_value_scan requires a CM form; level " +
                          std::to_string(form.level) + " is not CM");
    }
    require_coeffs(form, xmax);
    std::vector<std::pair<std::int64_t, BigRational>> out;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!form.good_prime(p) || form.coeff(p) != 0) continue;
        BigRational cp = prime_exponent(form.coeff(p), p);
        if (cp != make_rational(1, p)) {
            throw IntegrityError("c(p) != 1/p at vanishing prime p = " + std::to_string(p));
        }
        out.emplace_back(p, cp);
    }
    return out;
}

DistinctValueCount distinct_values_count(const Eigenform& form, std::int64_t xmax,
                                         const PrimeTable& table) {
    require_coeffs(form, xmax);
    DistinctValueCount result;
    std::set<BigRational> positive, negative;
    for (std::int64_t p : table.primes()) {
        if (p > xmax) break;
        if (!form.good_prime(p)) continue;
        BigRational cp = prime_exponent(form.coeff(p), p);
        if (cp > 0) {
            ++result.positive;
            positive.insert(cp);
        } else if (cp < 0) {
            ++result.negative;
            negative.insert(cp);
        }
    }
    result.distinct_positive = static_cast<std::int64_t>(positive.size());
    result.distinct_negative = static_cast<std::int64_t>(negative.size());
    return result;
}

IntegralityReport integrality_scan(const ExponentSeries& exponents, std::int64_t limit,
                                   const PrimeTable& table) {
    if (limit > exponents.bound()) {
        throw ShapeError("exponents known to " + std::to_string(exponents.bound()) + ", need " +
                         std::to_string(limit));
    }
    IntegralityReport report;
    report.level = exponents.level;
    report.limit = limit;
    for (std::int64_t n = 1; n <= limit; ++n) {
        const BigRational& cn = exponents.at(n);
        std::int64_t s0 = table.sigma0(n);
        if (cn != 0 && is_integer(cn)) {
            report.integral_exponents.emplace_back(n, BigInt(cn.get_num()));
            // n <= 2 sqrt(n) sigma0(n)^3  <=>  n <= 4 sigma0(n)^6, exactly.
            BigInt s0_cubed = BigInt(static_cast<long>(s0));
            s0_cubed = s0_cubed * s0_cubed * s0_cubed;
            if (BigInt(static_cast<long>(n)) > 4 * s0_cubed * s0_cubed) {
                report.size_bound_violations.push_back(n);
            }
        }
        // |n c(n)| <= sqrt(n) sigma0(n)^2  <=>  (n c(n))^2 <= n sigma0(n)^4.
        BigRational ncn = cn * n;
        BigInt s0_sq = BigInt(static_cast<long>(s0)) * BigInt(static_cast<long>(s0));
        if (ncn * ncn > BigRational(BigInt(static_cast<long>(n)) * s0_sq * s0_sq)) {
            report.growth_bound_violations.push_back(n);
        }
    }
    return report;
}

BoundReport first_sign_change(const ExponentSeries& exponents, std::int64_t level,
                              const PrimeTable& table) {
    if (level < 1) throw DomainError("first_sign_change requires a known level >= 1");
    BoundReport report;
    report.level = level;
    report.search_bound = exponents.bound();
    double n = static_cast<double>(level);
    report.bound_38 = std::pow(4.0 * n, 0.375);
    report.psi2 = psi2(level);
    double log_n = std::log(n);
    double tail = std::max(report.psi2,
                           4.0 * std::sqrt(n) * std::pow(std::log(2.0 * n), 16.0));
    report.n0 = std::pow(n, 5.0) * std::pow(log_n, 10.0) *
                std::exp(std::log(n + 1.0) / std::log(std::log(n + 2.0))) * tail;
    for (const auto& [p, e] : table.factor(level)) {
        if (e > 1) report.level_squarefree = false;
    }
    if (exponents.bound() < 1) throw ShapeError("need exponents to at least n = 1");
    report.d2 = 0;
    for (std::int64_t m = 1; m <= exponents.bound(); ++m) {
        if (exponents.at(m) < 0) {
            report.d2 = m;
            break;
        }
    }
    for (std::int64_t m = 2; m <= exponents.bound(); ++m) {
        if (exponents.at(m) > 0) {
            report.d1 = m;
            break;
        }
    }
    return report;
}

} // namespace gmfq
