#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gmfq/rational.hpp"

namespace gmfq {

/// Integral long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// together with its conductor and the trace values at the bad primes.
struct EllipticCurve {
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    std::int64_t conductor = 0;
    std::map<std::int64_t, std::int64_t> bad_ap; // exactly the primes dividing the conductor

    BigInt discriminant() const;
};

/// Trace of Frobenius a_p = p + 1 - #E(F_p).
///
/// p = 2, 3 enumerate the long model directly. Larger p complete the square
/// to y'^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 and scan x with a precomputed
/// quadratic-residue table; the cubic is advanced by finite differences, so
/// the scan is addition-only. Bad primes are answered from bad_ap.
std::int64_t curve_ap(const EllipticCurve& curve, std::int64_t p);

/// a_p for every prime in `primes`, ascending, optionally computed on
/// several threads. The result is independent of the thread count.
std::vector<std::int64_t> curve_ap_range(const EllipticCurve& curve,
                                         const std::vector<std::int64_t>& primes,
                                         int threads = 1);

} // namespace gmfq
