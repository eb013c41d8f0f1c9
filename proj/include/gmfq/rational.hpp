#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gmfq {

// Exact arithmetic types. Exponents c(n) are rationals with n*c(n)
// integral; eigenform coefficients are integers. GMP keeps rationals
// canonical (lowest terms, positive denominator) under arithmetic.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Build a canonical rational from a possibly unreduced num/den pair.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline bool is_integer(const BigRational& q) {
    return q.get_den() == 1;
}

// "num/den" in lowest terms; integers render without the "/1".
inline std::string to_string(const BigRational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace gmfq
