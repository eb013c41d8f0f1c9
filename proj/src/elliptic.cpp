#include "gmfq/elliptic.hpp"

#include <string>
#include <thread>

#include "gmfq/errors.hpp"

namespace gmfq {

BigInt EllipticCurve::discriminant() const {
    BigInt a1_(static_cast<long>(a1)), a2_(static_cast<long>(a2)), a3_(static_cast<long>(a3)),
        a4_(static_cast<long>(a4)), a6_(static_cast<long>(a6));
    BigInt b2 = a1_ * a1_ + 4 * a2_;
    BigInt b4 = 2 * a4_ + a1_ * a3_;
    BigInt b6 = a3_ * a3_ + 4 * a6_;
    BigInt b8 = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

namespace {

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Direct affine enumeration of the long model; only used for p = 2, 3.
std::int64_t ap_enumerate(const EllipticCurve& e, std::int64_t p) {
    std::int64_t count = 1; // point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t rhs = mod_reduce(((x + e.a2) * x + e.a4) * x + e.a6, p);
        for (std::int64_t y = 0; y < p; ++y) {
            if (mod_reduce(y * y + e.a1 * x * y + e.a3 * y, p) == rhs) ++count;
        }
    }
    return p + 1 - count;
}

// a_p = -sum_x chi(g(x)) for g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6, where chi
// is the quadratic character mod p (chi(0) = 0). Substituting
// y' = 2y + a1 x + a3 turns the long model into y'^2 = g(x) bijectively.
std::int64_t ap_residue_scan(const EllipticCurve& e, std::int64_t p) {
    std::int64_t b2 = mod_reduce(e.a1 * e.a1 + 4 * e.a2, p);
    std::int64_t b4 = mod_reduce(2 * e.a4 + e.a1 * e.a3, p);
    std::int64_t b6 = mod_reduce(e.a3 * e.a3 + 4 * e.a6, p);

    // Squares mod p, built incrementally: r^2 = (r-1)^2 + 2r - 1.
    std::vector<std::uint8_t> square(static_cast<std::size_t>(p), 0);
    std::int64_t sq = 0, step = 1;
    for (std::int64_t r = 1; r <= p / 2; ++r) {
        sq += step;
        if (sq >= p) sq -= p;
        step += 2;
        if (step >= p) step -= p;
        square[static_cast<std::size_t>(sq)] = 1;
    }

    // Finite differences of the cubic g: third difference is 24 mod p.
    std::int64_t g = b6;                                        // g(0)
    std::int64_t d1 = mod_reduce(4 + b2 + 2 * b4, p);           // g(1) - g(0)
    std::int64_t d2 = mod_reduce(24 + 2 * b2, p);               // second difference at 0
    const std::int64_t d3 = mod_reduce(24, p);

    std::int64_t sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        if (g != 0) sum += square[static_cast<std::size_t>(g)] ? 1 : -1;
        g += d1;
        if (g >= p) g -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return -sum;
}

} // namespace

std::int64_t curve_ap(const EllipticCurve& curve, std::int64_t p) {
    if (p < 2) throw DomainError("curve_ap requires a prime p >= 2");
    if (curve.conductor % p == 0) {
        auto it = curve.bad_ap.find(p);
        if (it == curve.bad_ap.end()) {
            throw IntegrityError("no stored a_p for bad prime " + std::to_string(p) +
                                 " of conductor " + std::to_string(curve.conductor));
        }
        return it->second;
    }
    std::int64_t ap = (p <= 3) ? ap_enumerate(curve, p) : ap_residue_scan(curve, p);
    if (ap * ap > 4 * p) {
        throw IntegrityError("Hasse bound violated at p = " + std::to_string(p) +
                             ": a_p = " + std::to_string(ap));
    }
    return ap;
}

std::vector<std::int64_t> curve_ap_range(const EllipticCurve& curve,
                                         const std::vector<std::int64_t>& primes,
                                         int threads) {
    std::vector<std::int64_t> out(primes.size());
    if (threads <= 1 || primes.size() < 64) {
        for (std::size_t i = 0; i < primes.size(); ++i) out[i] = curve_ap(curve, primes[i]);
        return out;
    }
    // Strided assignment balances the O(p) per-prime cost across workers;
    // each index is written by exactly one thread.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < primes.size();
                 i += static_cast<std::size_t>(threads)) {
                out[i] = curve_ap(curve, primes[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

} // namespace gmfq
