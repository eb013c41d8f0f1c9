#include "gmfq/eta.hpp"

#include <cstdlib>
#include <set>
#include <string>

#include "gmfq/errors.hpp"

namespace gmfq {

namespace {

// Exponent/sign pairs of prod_{n>=1} (1 - x^n) = 1 + sum_k (-1)^k
// (x^{k(3k-1)/2} + x^{k(3k+1)/2}), scaled by m, truncated at `order`.
// The constant term is omitted.
std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t order, std::int64_t m) {
    std::vector<std::pair<std::int64_t, int>> terms;
    for (std::int64_t k = 1;; ++k) {
        std::int64_t g1 = m * (k * (3 * k - 1) / 2);
        std::int64_t g2 = m * (k * (3 * k + 1) / 2);
        if (g1 > order && g2 > order) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 <= order) terms.emplace_back(g1, sign);
        if (g2 <= order) terms.emplace_back(g2, sign);
    }
    return terms;
}

// In-place multiply by 1 + sum_e sign_e x^e (descending index keeps reads
// on pre-update values).
void mul_sparse(std::vector<BigInt>& acc,
                const std::vector<std::pair<std::int64_t, int>>& terms) {
    const std::int64_t order = static_cast<std::int64_t>(acc.size()) - 1;
    for (std::int64_t j = order; j >= 0; --j) {
        for (const auto& [e, sign] : terms) {
            if (e > j) break;
            if (sign > 0) {
                acc[j] += acc[j - e];
            } else {
                acc[j] -= acc[j - e];
            }
        }
    }
}

// In-place divide by the same sparse unit polynomial (synthetic division).
void div_sparse(std::vector<BigInt>& acc,
                const std::vector<std::pair<std::int64_t, int>>& terms) {
    const std::int64_t order = static_cast<std::int64_t>(acc.size()) - 1;
    for (std::int64_t j = 0; j <= order; ++j) {
        for (const auto& [e, sign] : terms) {
            if (e > j) break;
            if (sign > 0) {
                acc[j] -= acc[j - e];
            } else {
                acc[j] += acc[j - e];
            }
        }
    }
}

} // namespace

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
    std::set<std::int64_t> seen;
    for (const auto& f : factors_) {
        if (f.m < 1) throw DomainError("eta factor argument must be >= 1");
        if (!seen.insert(f.m).second) {
            throw DomainError("duplicate eta factor argument " + std::to_string(f.m));
        }
    }
}

BigRational EtaQuotient::order_at_infinity() const {
    std::int64_t sum = 0;
    for (const auto& f : factors_) sum += f.m * f.r;
    return make_rational(sum, 24);
}

BigRational EtaQuotient::weight() const {
    std::int64_t sum = 0;
    for (const auto& f : factors_) sum += f.r;
    return make_rational(sum, 2);
}

std::vector<BigInt> EtaQuotient::expand_integer(std::int64_t order) const {
    if (order < 0) throw DomainError("expansion order must be >= 0");
    BigRational h_rat = order_at_infinity();
    if (!is_integer(h_rat) || h_rat < 0) {
        throw DomainError("unsupported eta quotient: leading power " + to_string(h_rat) +
                          " is not a non-negative integer");
    }
    std::int64_t h = h_rat.get_num().get_si();

    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1);
    acc[0] = 1;
    if (h > order) {
        // Entire expansion vanishes below the truncation order.
        acc[0] = 0;
        return acc;
    }
    for (const auto& f : factors_) {
        auto terms = pentagonal_terms(order, f.m);
        for (std::int64_t i = 0; i < std::abs(f.r); ++i) {
            if (f.r > 0) {
                mul_sparse(acc, terms);
            } else {
                div_sparse(acc, terms);
            }
        }
    }
    if (h > 0) {
        for (std::int64_t j = order; j >= h; --j) acc[j] = acc[j - h];
        for (std::int64_t j = 0; j < h; ++j) acc[j] = 0;
    }
    return acc;
}

PowerSeries EtaQuotient::expand(std::int64_t order) const {
    auto ints = expand_integer(order);
    std::vector<BigRational> coeffs(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i) coeffs[i] = BigRational(ints[i]);
    return PowerSeries(order, std::move(coeffs));
}

} // namespace gmfq
